#include "opglue/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace opglue {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

ErrorKind safety_error_kind(ValidationReport const& safety) {
  for (auto const& d : safety.diagnostics) {
    if (d.kind == "type-safety" || d.kind == "missing-witness" || d.kind == "invalid-witness") {
      return ErrorKind::safety_violation;
    }
  }
  for (auto const& d : safety.diagnostics) {
    if (d.kind == "inconsistent-quotient") return ErrorKind::inconsistent_quotient;
  }
  return ErrorKind::action_disagreement;
}

namespace {

// Flat numbering of (part, element) pairs.
class Numbering {
 public:
  template <typename SizeOf>
  Numbering(std::vector<QuotientPart> const& parts, SizeOf size_of) {
    for (auto const& p : parts) {
      offsets_.push_back(total_);
      total_ += size_of(*p.dsl);
    }
  }
  std::size_t flat(ElementRef r) const { return offsets_[r.part] + r.index; }
  std::size_t total() const noexcept { return total_; }

 private:
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

struct Partition {
  std::vector<std::vector<ElementRef>> classes;
  std::vector<std::vector<std::size_t>> class_of;
};

template <typename SizeOf>
Partition close_links(std::vector<QuotientPart> const& parts,
                      std::vector<std::pair<ElementRef, ElementRef>> const& links, SizeOf size_of) {
  Numbering numbering(parts, size_of);
  DisjointSets sets(numbering.total());
  for (auto const& [a, b] : links) sets.unite(numbering.flat(a), numbering.flat(b));

  Partition out;
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    out.class_of.emplace_back(size_of(*parts[p].dsl));
    for (std::size_t i = 0; i < out.class_of[p].size(); ++i) {
      auto root = sets.find(numbering.flat({p, i}));
      auto [it, fresh] = class_of_root.emplace(root, out.classes.size());
      if (fresh) out.classes.emplace_back();
      out.classes[it->second].push_back({p, i});
      out.class_of[p][i] = it->second;
    }
  }
  return out;
}

std::vector<ElementRef> naming_members(std::vector<QuotientPart> const& parts,
                                       std::vector<ElementRef> const& members) {
  std::vector<ElementRef> out;
  for (auto const& m : members) {
    if (parts[m.part].naming) out.push_back(m);
  }
  return out.empty() ? members : out;
}

std::string join_names(std::vector<std::string> const& names) {
  std::vector<std::string> unique;
  for (auto const& n : names) {
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
  }
  std::string out;
  for (auto const& n : unique) out += (out.empty() ? "" : "+") + n;
  return out;
}

std::string fresh_name(std::string name, std::set<std::string>& taken) {
  while (taken.contains(name)) name += "'";
  taken.insert(name);
  return name;
}

SigilDecl const& sigil_at(std::vector<QuotientPart> const& parts, ElementRef r) {
  return parts[r.part].dsl->universe.sigils[r.index];
}

FunctionSymbol const& symbol_at(std::vector<QuotientPart> const& parts, ElementRef r) {
  return parts[r.part].dsl->symbols[r.index];
}

std::string label(std::vector<QuotientPart> const& parts, ElementRef r, bool symbol) {
  auto const& name = symbol ? symbol_at(parts, r).name : sigil_at(parts, r).name;
  return parts[r.part].label + ":" + name;
}

std::string render_tuple(std::vector<Value> const& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + to_display(args[i]);
  return out + ")";
}

}  // namespace

Quotient compute_quotient(QuotientInput const& input) {
  auto const& parts = input.parts;
  auto sigil_count = [](Dsl const& d) { return d.universe.sigils.size(); };
  auto symbol_count = [](Dsl const& d) { return d.symbols.size(); };
  auto sigils = close_links(parts, input.sigil_links, sigil_count);
  auto symbols = close_links(parts, input.symbol_links, symbol_count);

  Quotient q;
  q.sigil_class_of = sigils.class_of;
  q.symbol_class_of = symbols.class_of;

  // Sigil classes: one base per class, witnessed merges between naming members.
  std::vector<bool> sigil_class_safe(sigils.classes.size(), true);
  std::vector<BaseType> class_base(sigils.classes.size(), BaseType::unit);
  std::set<std::size_t> used;
  for (std::size_t c = 0; c < sigils.classes.size(); ++c) {
    auto const& members = sigils.classes[c];
    class_base[c] = sigil_at(parts, members.front()).base;
    if (members.size() < 2) continue;

    auto odd = std::find_if(members.begin(), members.end(), [&](ElementRef r) {
      return sigil_at(parts, r).base != class_base[c];
    });
    if (odd != members.end()) {
      sigil_class_safe[c] = false;
      q.safety.add("type-safety", label(parts, members.front(), false),
                   "no base type equates " + std::string(to_string(class_base[c])) + " and " +
                       std::string(to_string(sigil_at(parts, *odd).base)) + " (merging " +
                       label(parts, members.front(), false) + " with " +
                       label(parts, *odd, false) + ")");
      continue;
    }

    auto naming = naming_members(parts, members);
    if (naming.size() < 2) continue;
    std::map<ElementRef, std::size_t> position;
    for (std::size_t k = 0; k < naming.size(); ++k) position[naming[k]] = k;
    DisjointSets witnessed(naming.size());
    for (std::size_t w = 0; w < input.witnesses.size(); ++w) {
      auto const& wit = input.witnesses[w];
      auto l = position.find(wit.left);
      auto r = position.find(wit.right);
      if (l == position.end() || r == position.end() || wit.base != class_base[c]) continue;
      witnessed.unite(l->second, r->second);
      used.insert(w);
    }
    for (std::size_t k = 1; k < naming.size(); ++k) {
      if (witnessed.find(k) != witnessed.find(0)) {
        sigil_class_safe[c] = false;
        q.safety.add("missing-witness", label(parts, naming[k], false),
                     "merge of " + label(parts, naming.front(), false) + " with " +
                         label(parts, naming[k], false) + " has no glue witness");
        break;
      }
    }
  }

  for (auto const& wit : input.witnesses) {
    auto lb = sigil_at(parts, wit.left).base;
    auto rb = sigil_at(parts, wit.right).base;
    if (lb != wit.base || rb != wit.base) {
      q.safety.add("invalid-witness", label(parts, wit.left, false),
                   "witness (" + label(parts, wit.left, false) + ", " +
                       label(parts, wit.right, false) + ", " + std::string(to_string(wit.base)) +
                       ") does not hold: denotations are " + std::string(to_string(lb)) +
                       " and " + std::string(to_string(rb)));
    }
  }
  q.witnesses_used.assign(used.begin(), used.end());

  // Class names.
  std::set<std::string> taken;
  for (auto const& members : sigils.classes) {
    std::vector<std::string> names;
    for (auto r : naming_members(parts, members)) names.push_back(sigil_at(parts, r).name);
    EquivalenceClass cls{fresh_name(join_names(names), taken), {}};
    for (auto r : members) cls.members.push_back({parts[r.part].label, sigil_at(parts, r).name});
    q.sigil_classes.push_back(std::move(cls));
  }
  taken.clear();
  for (auto const& members : symbols.classes) {
    std::vector<std::string> names;
    for (auto r : naming_members(parts, members)) names.push_back(symbol_at(parts, r).name);
    EquivalenceClass cls{fresh_name(join_names(names), taken), {}};
    for (auto r : members) cls.members.push_back({parts[r.part].label, symbol_at(parts, r).name});
    q.symbol_classes.push_back(std::move(cls));
  }

  auto quotient_signature = [&](ElementRef r) {
    auto const& sig = symbol_at(parts, r).signature;
    auto const& universe = parts[r.part].dsl->universe;
    auto class_of = [&](std::string const& s) {
      return sigils.class_of[r.part][*universe.find(s)];
    };
    std::vector<std::size_t> out;
    for (auto const& s : sig.domain) out.push_back(class_of(s));
    out.push_back(class_of(sig.codomain));
    return out;
  };

  // Symbol classes: consistent quotient signatures, extensional agreement.
  for (std::size_t c = 0; c < symbols.classes.size(); ++c) {
    auto const& members = symbols.classes[c];
    if (members.size() < 2) continue;
    auto rep = naming_members(parts, members).front();
    auto rep_sig = quotient_signature(rep);
    bool consistent = true;
    for (auto r : members) {
      if (quotient_signature(r) != rep_sig) {
        consistent = false;
        q.safety.add("inconsistent-quotient", label(parts, r, true),
                     "symbols " + label(parts, rep, true) + " and " + label(parts, r, true) +
                         " are merged but their signatures disagree after the type quotient");
        break;
      }
    }
    if (!consistent) continue;
    if (!std::all_of(rep_sig.begin(), rep_sig.end(),
                     [&](std::size_t sc) { return sigil_class_safe[sc]; })) {
      continue;
    }

    auto const& rep_dsl = *parts[rep.part].dsl;
    auto const& rep_fn = symbol_at(parts, rep);
    for (auto r : members) {
      if (r == rep) continue;
      auto const& dsl = *parts[r.part].dsl;
      auto const& fn = symbol_at(parts, r);
      for_each_tuple(rep_dsl.denote(rep_fn.signature.domain), input.bound,
                     [&](std::vector<Value> const& args) {
                       auto expected = eval_action(rep_dsl, rep_fn, args);
                       auto actual = eval_action(dsl, fn, args);
                       if (expected == actual) return true;
                       q.safety.add("action-disagreement", label(parts, r, true),
                                    "on " + render_tuple(args) + " " + label(parts, rep, true) +
                                        " gives " + to_display(expected) + " but " +
                                        label(parts, r, true) + " gives " + to_display(actual));
                       return false;
                     });
    }
  }

  if (!q.safety.ok()) return q;

  q.glued.name = input.name;
  for (std::size_t c = 0; c < sigils.classes.size(); ++c) {
    q.glued.universe.sigils.push_back({q.sigil_classes[c].name, class_base[c]});
  }
  for (std::size_t c = 0; c < symbols.classes.size(); ++c) {
    auto rep = naming_members(parts, symbols.classes[c]).front();
    auto const& fn = symbol_at(parts, rep);
    auto sig = quotient_signature(rep);
    Signature glued_sig;
    for (std::size_t k = 0; k + 1 < sig.size(); ++k) {
      glued_sig.domain.push_back(q.sigil_classes[sig[k]].name);
    }
    glued_sig.codomain = q.sigil_classes[sig.back()].name;
    q.glued.symbols.push_back({q.symbol_classes[c].name, std::move(glued_sig), fn.action});
  }
  return q;
}

}  // namespace opglue
