#include "opglue/morphism.hpp"

#include <set>

namespace opglue {

std::string const& DslMorphism::map_sigil(std::string_view sigil) const {
  auto it = type_map.find(std::string(sigil));
  if (it == type_map.end()) {
    throw Error(ErrorKind::unknown_sigil, "sigil " + std::string(sigil) + " is not mapped");
  }
  return it->second;
}

std::string const& DslMorphism::map_symbol(std::string_view symbol) const {
  auto it = symbol_map.find(std::string(symbol));
  if (it == symbol_map.end()) {
    throw Error(ErrorKind::unknown_symbol, "symbol " + std::string(symbol) + " is not mapped");
  }
  return it->second;
}

DslMorphism identity_morphism(Dsl const& d) {
  DslMorphism m{d, d, {}, {}};
  for (auto const& s : d.universe.sigils) m.type_map[s.name] = s.name;
  for (auto const& f : d.symbols) m.symbol_map[f.name] = f.name;
  return m;
}

DslMorphism compose(DslMorphism const& second, DslMorphism const& first) {
  DslMorphism out{first.source, second.target, {}, {}};
  for (auto const& [from, to] : first.type_map) out.type_map[from] = second.map_sigil(to);
  for (auto const& [from, to] : first.symbol_map) out.symbol_map[from] = second.map_symbol(to);
  return out;
}

ValidationReport check_morphism_structure(DslMorphism const& m) {
  ValidationReport report;
  for (auto const& s : m.source.universe.sigils) {
    auto it = m.type_map.find(s.name);
    if (it == m.type_map.end()) {
      report.add("unmapped-sigil", s.name, "sigil " + s.name + " has no image");
    } else if (!m.target.universe.contains(it->second)) {
      report.add("unknown-sigil", s.name, "unknown sigil " + it->second + " in " + m.target.name);
    }
  }
  for (auto const& [from, _] : m.type_map) {
    if (!m.source.universe.contains(from)) {
      report.add("extraneous-sigil", from, "sigil " + from + " is not in " + m.source.name);
    }
  }
  for (auto const& f : m.source.symbols) {
    auto it = m.symbol_map.find(f.name);
    if (it == m.symbol_map.end()) {
      report.add("unmapped-symbol", f.name, "symbol " + f.name + " has no image");
    } else if (!m.target.find_symbol(it->second)) {
      report.add("unknown-symbol", f.name,
                 "unknown symbol " + it->second + " in " + m.target.name);
    }
  }
  for (auto const& [from, _] : m.symbol_map) {
    if (!m.source.find_symbol(from)) {
      report.add("extraneous-symbol", from, "symbol " + from + " is not in " + m.source.name);
    }
  }
  return report;
}

namespace {

std::string render_signature(std::vector<std::string> const& domain, std::string const& codomain) {
  std::string out = "[";
  for (std::size_t i = 0; i < domain.size(); ++i) out += (i ? "," : "") + domain[i];
  return out + "]->" + codomain;
}

std::string render_tuple(std::vector<Value> const& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + to_display(args[i]);
  return out + ")";
}

}  // namespace

ValidationReport check_morphism(DslMorphism const& m, std::size_t bound) {
  if (bound == 0) throw Error(ErrorKind::invalid_bound, "bound must be at least 1");
  ValidationReport report;
  auto src = validate_dsl(m.source);
  if (!src.ok()) report.add("invalid-source", m.source.name, src.diagnostics.front().message);
  auto tgt = validate_dsl(m.target);
  if (!tgt.ok()) report.add("invalid-target", m.target.name, tgt.diagnostics.front().message);
  report.append(check_morphism_structure(m));
  if (!report.ok()) return report;

  std::set<std::string> broken_sigils;
  for (auto const& s : m.source.universe.sigils) {
    auto const& image = m.map_sigil(s.name);
    auto image_base = m.target.denote(image);
    if (image_base != s.base) {
      broken_sigils.insert(s.name);
      report.add("denotation-mismatch", s.name,
                 "sigil " + s.name + " denotes " + std::string(to_string(s.base)) + " but " +
                     image + " denotes " + std::string(to_string(image_base)));
    }
  }

  for (auto const& f : m.source.symbols) {
    auto const& g = m.target.symbol(m.map_symbol(f.name));
    std::vector<std::string> expected_domain;
    for (auto const& s : f.signature.domain) expected_domain.push_back(m.map_sigil(s));
    auto expected_codomain = m.map_sigil(f.signature.codomain);
    if (g.signature.domain != expected_domain || g.signature.codomain != expected_codomain) {
      report.add("signature-commutation", f.name,
                 "image " + g.name + " has signature " +
                     render_signature(g.signature.domain, g.signature.codomain) + ", expected " +
                     render_signature(expected_domain, expected_codomain));
      continue;
    }
    bool translatable = !broken_sigils.contains(f.signature.codomain);
    for (auto const& s : f.signature.domain) translatable = translatable && !broken_sigils.contains(s);
    if (!translatable) continue;

    // Identity coercions: translated values are the values themselves.
    for_each_tuple(m.source.denote(f.signature.domain), bound, [&](std::vector<Value> const& args) {
      auto lhs = eval_action(m.target, g, args);
      auto rhs = eval_action(m.source, f, args);
      if (lhs == rhs) return true;
      report.add("action-preservation", f.name,
                 "on " + render_tuple(args) + " " + g.name + " gives " + to_display(lhs) +
                     " but " + f.name + " gives " + to_display(rhs));
      return false;
    });
  }
  return report;
}

bool is_isomorphism(DslMorphism const& m, std::size_t bound) {
  if (!check_morphism(m, bound).ok()) return false;
  if (m.source.universe.sigils.size() != m.target.universe.sigils.size() ||
      m.source.symbols.size() != m.target.symbols.size()) {
    return false;
  }
  DslMorphism inverse{m.target, m.source, {}, {}};
  for (auto const& [from, to] : m.type_map) {
    if (!inverse.type_map.emplace(to, from).second) return false;
  }
  for (auto const& [from, to] : m.symbol_map) {
    if (!inverse.symbol_map.emplace(to, from).second) return false;
  }
  return check_morphism(inverse, bound).ok();
}

OperadTerm map_term(DslMorphism const& m, OperadTerm const& t) {
  return std::visit(
      [&](auto const& node) -> OperadTerm {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OperadTerm::Unit>) {
          return OperadTerm::make_unit(m.map_sigil(node.color));
        } else if constexpr (std::is_same_v<T, OperadTerm::Generator>) {
          return OperadTerm::make_generator(m.map_symbol(node.symbol));
        } else if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          return OperadTerm::make_graft(map_term(m, *node.outer), node.index,
                                        map_term(m, *node.inner));
        } else {
          return OperadTerm::make_permuted(map_term(m, *node.base), node.perm);
        }
      },
      t.node());
}

}  // namespace opglue
