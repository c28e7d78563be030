#ifndef OPGLUE_TESTS_SUPPORT_HPP_
#define OPGLUE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opglue/diagram.hpp"
#include "opglue/files.hpp"
#include "opglue/operad.hpp"
#include "opglue/pushout.hpp"

namespace testing {

using namespace opglue;

inline std::filesystem::path data_path(std::string const& name) {
  return std::filesystem::path(OPGLUE_DATA_DIR) / name;
}

inline Dsl dslu() { return files::load_dsl(data_path("dslu.dsl.json")); }
inline Dsl dslp() { return files::load_dsl(data_path("dslp.dsl.json")); }
inline Dsl bnu() { return files::load_dsl(data_path("bnu.dsl.json")); }

inline std::vector<std::string> packaged_dsls() {
  return {"dslu.dsl.json", "dslp.dsl.json", "bnu.dsl.json", "z_nat.dsl.json",
          "z_str.dsl.json", "z_empty.dsl.json", "z_print.dsl.json"};
}

inline std::vector<std::string> packaged_glues() {
  return {"dslu_dslp.glue.json", "dslu_dslp_fprint.glue.json",
          "dslu_dslp_disjoint.glue.json", "bad-structstr.glue.json"};
}

inline std::vector<std::string> packaged_diagrams() {
  return {"span.diag.json", "discrete.diag.json", "point.diag.json"};
}

inline DslMorphism morphism(Dsl source, Dsl target, std::map<std::string, std::string> types,
                            std::map<std::string, std::string> symbols = {}) {
  return {std::move(source), std::move(target), std::move(types), std::move(symbols)};
}

inline Dsl single_sigil(std::string name, std::string sigil, BaseType base) {
  Dsl d;
  d.name = std::move(name);
  d.universe.sigils.push_back({std::move(sigil), base});
  return d;
}

using Partition = std::set<std::set<ClassMember>>;

inline Partition partition_of(std::vector<EquivalenceClass> const& classes) {
  Partition p;
  for (auto const& c : classes) p.insert({c.members.begin(), c.members.end()});
  return p;
}

// Reflexive, symmetric, transitive closure of `pairs` over `elements` by
// repeated boolean matrix squaring (Warshall), then read off the blocks.
inline Partition closure_partition(std::vector<ClassMember> const& elements,
                                   std::vector<std::pair<ClassMember, ClassMember>> const& pairs) {
  auto const n = elements.size();
  auto index = [&](ClassMember const& m) {
    return static_cast<std::size_t>(std::find(elements.begin(), elements.end(), m) -
                                    elements.begin());
  };
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto const& [a, b] : pairs) {
    r[index(a)][index(b)] = true;
    r[index(b)][index(a)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  Partition p;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<ClassMember> block;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i][j]) block.insert(elements[j]);
    }
    p.insert(block);
  }
  return p;
}

inline std::vector<ClassMember> sigils_of(std::string const& object, Dsl const& d) {
  std::vector<ClassMember> out;
  for (auto const& s : d.universe.sigils) out.push_back({object, s.name});
  return out;
}

inline std::vector<ClassMember> symbols_of(std::string const& object, Dsl const& d) {
  std::vector<ClassMember> out;
  for (auto const& f : d.symbols) out.push_back({object, f.name});
  return out;
}

inline Partition without_object(Partition const& p, std::string const& object) {
  Partition out;
  for (auto const& block : p) {
    std::set<ClassMember> kept;
    for (auto const& m : block) {
      if (m.object != object) kept.insert(m);
    }
    if (!kept.empty()) out.insert(kept);
  }
  return out;
}

// Oracle for the sigil partition of a pushout: the apex joins both legs and
// is removed afterwards.
inline Partition span_sigil_oracle(Span const& s) {
  auto elements = sigils_of("apex", s.apex);
  for (auto const& m : sigils_of(left_label, s.left.target)) elements.push_back(m);
  for (auto const& m : sigils_of(right_label, s.right.target)) elements.push_back(m);
  std::vector<std::pair<ClassMember, ClassMember>> pairs;
  for (auto const& z : s.apex.universe.sigils) {
    pairs.push_back({{"apex", z.name}, {left_label, s.left.type_map.at(z.name)}});
    pairs.push_back({{"apex", z.name}, {right_label, s.right.type_map.at(z.name)}});
  }
  return without_object(closure_partition(elements, pairs), "apex");
}

inline Partition span_symbol_oracle(Span const& s) {
  auto elements = symbols_of("apex", s.apex);
  for (auto const& m : symbols_of(left_label, s.left.target)) elements.push_back(m);
  for (auto const& m : symbols_of(right_label, s.right.target)) elements.push_back(m);
  std::vector<std::pair<ClassMember, ClassMember>> pairs;
  for (auto const& f : s.apex.symbols) {
    pairs.push_back({{"apex", f.name}, {left_label, s.left.symbol_map.at(f.name)}});
    pairs.push_back({{"apex", f.name}, {right_label, s.right.symbol_map.at(f.name)}});
  }
  return without_object(closure_partition(elements, pairs), "apex");
}

inline Partition diagram_sigil_oracle(Diagram const& d) {
  std::vector<ClassMember> elements;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    for (auto const& m : sigils_of(d.shape.objects[i], d.nodes[i])) elements.push_back(m);
  }
  std::vector<std::pair<ClassMember, ClassMember>> pairs;
  for (std::size_t e = 0; e < d.shape.edges.size(); ++e) {
    auto const& edge = d.shape.edges[e];
    for (auto const& [from, to] : d.morphisms[e].type_map) {
      pairs.push_back({{edge.from, from}, {edge.to, to}});
    }
  }
  return closure_partition(elements, pairs);
}

// Renames sigils and symbols; names missing from a map are kept.
inline Dsl renamed(Dsl d, std::map<std::string, std::string> const& sigils,
                   std::map<std::string, std::string> const& symbols) {
  auto rename = [](std::map<std::string, std::string> const& m, std::string& name) {
    if (auto it = m.find(name); it != m.end()) name = it->second;
  };
  for (auto& s : d.universe.sigils) rename(sigils, s.name);
  for (auto& f : d.symbols) {
    rename(symbols, f.name);
    for (auto& a : f.signature.domain) rename(sigils, a);
    rename(sigils, f.signature.codomain);
  }
  return d;
}

// Order-insensitive normal form for structural comparison.
inline Dsl sorted(Dsl d) {
  std::sort(d.universe.sigils.begin(), d.universe.sigils.end(),
            [](auto const& a, auto const& b) { return a.name < b.name; });
  std::sort(d.symbols.begin(), d.symbols.end(),
            [](auto const& a, auto const& b) { return a.name < b.name; });
  return d;
}

// Class-name bijection between two class lists whose member sets agree after
// relabelling members of `from` through `relabel`.
inline std::map<std::string, std::string> class_bijection(
    std::vector<EquivalenceClass> const& from, std::vector<EquivalenceClass> const& to,
    std::map<std::string, std::string> const& relabel) {
  std::map<std::string, std::string> out;
  for (auto const& c : from) {
    std::set<ClassMember> members;
    for (auto m : c.members) {
      if (auto it = relabel.find(m.object); it != relabel.end()) m.object = it->second;
      members.insert(m);
    }
    for (auto const& d : to) {
      std::set<ClassMember> other;
      for (auto const& m : d.members) {
        if (relabel.empty() || m.object != "apex") other.insert(m);
      }
      if (other == members) out[c.name] = d.name;
    }
  }
  return out;
}

// Direct substitution: f(x_0..x_{i-1}, g(y..), x_{i+m}..) with f and g applied
// through their actions only.
inline Value substituted(Dsl const& d, FunctionSymbol const& f, std::size_t i,
                         FunctionSymbol const& g, std::vector<Value> const& args) {
  auto const m = g.signature.arity();
  std::vector<Value> inner(args.begin() + static_cast<std::ptrdiff_t>(i),
                           args.begin() + static_cast<std::ptrdiff_t>(i + m));
  std::vector<Value> outer(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i));
  outer.push_back(eval_action(d, g, inner));
  outer.insert(outer.end(), args.begin() + static_cast<std::ptrdiff_t>(i + m), args.end());
  return eval_action(d, f, outer);
}

}  // namespace testing

#endif
