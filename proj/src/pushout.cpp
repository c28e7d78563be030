#include "opglue/pushout.hpp"

#include <algorithm>
#include <set>

#include "map_search.hpp"

namespace opglue {

Span swapped(Span const& s) { return {s.apex, s.right, s.left}; }

namespace {

void require_span_structure(Span const& s) {
  require_valid(s.apex);
  require_valid(s.left.target);
  require_valid(s.right.target);
  ValidationReport report;
  if (!(s.left.source == s.apex)) report.add("apex-mismatch", "left", "left morphism does not start at the apex");
  if (!(s.right.source == s.apex)) report.add("apex-mismatch", "right", "right morphism does not start at the apex");
  report.append(check_morphism_structure(s.left));
  report.append(check_morphism_structure(s.right));
  if (!report.ok()) {
    throw Error(ErrorKind::invalid_morphism,
                "malformed span: " + report.diagnostics.front().message, report);
  }
}

std::string glued_name(Dsl const& left, Dsl const& right) {
  return left.name == right.name ? left.name : left.name + "+" + right.name;
}

std::size_t sigil_index(Dsl const& d, std::string const& sigil) {
  auto idx = d.universe.find(sigil);
  if (!idx) throw Error(ErrorKind::unknown_sigil, "unknown sigil " + sigil + " in " + d.name);
  return *idx;
}

std::size_t symbol_index(Dsl const& d, std::string const& symbol) {
  auto idx = d.find_symbol(symbol);
  if (!idx) throw Error(ErrorKind::unknown_symbol, "unknown symbol " + symbol + " in " + d.name);
  return *idx;
}

QuotientInput span_quotient_input(Span const& s, std::vector<GlueWitness> const& witnesses,
                                  std::size_t bound) {
  auto const& left = s.left.target;
  auto const& right = s.right.target;
  QuotientInput in;
  in.name = glued_name(left, right);
  in.bound = bound;
  in.parts = {{left_label, &left, true}, {right_label, &right, true}};
  for (auto const& z : s.apex.universe.sigils) {
    in.sigil_links.push_back({{0, sigil_index(left, s.left.map_sigil(z.name))},
                              {1, sigil_index(right, s.right.map_sigil(z.name))}});
  }
  for (auto const& f : s.apex.symbols) {
    in.symbol_links.push_back({{0, symbol_index(left, s.left.map_symbol(f.name))},
                               {1, symbol_index(right, s.right.map_symbol(f.name))}});
  }
  for (auto const& w : witnesses) {
    in.witnesses.push_back(
        {{0, sigil_index(left, w.left_sigil)}, {1, sigil_index(right, w.right_sigil)}, w.base});
  }
  return in;
}

DslMorphism injection(Dsl const& part, Dsl const& glued, std::size_t part_index, Quotient const& q) {
  DslMorphism m{part, glued, {}, {}};
  for (std::size_t i = 0; i < part.universe.sigils.size(); ++i) {
    m.type_map[part.universe.sigils[i].name] = q.sigil_classes[q.sigil_class_of[part_index][i]].name;
  }
  for (std::size_t i = 0; i < part.symbols.size(); ++i) {
    m.symbol_map[part.symbols[i].name] = q.symbol_classes[q.symbol_class_of[part_index][i]].name;
  }
  return m;
}

}  // namespace

ValidationReport check_safety(Span const& s, std::vector<GlueWitness> const& witnesses,
                              std::size_t bound) {
  if (bound == 0) throw Error(ErrorKind::invalid_bound, "bound must be at least 1");
  require_span_structure(s);
  return compute_quotient(span_quotient_input(s, witnesses, bound)).safety;
}

PushoutResult pushout(Span const& s, std::vector<GlueWitness> const& witnesses,
                      std::size_t bound) {
  if (bound == 0) throw Error(ErrorKind::invalid_bound, "bound must be at least 1");
  require_span_structure(s);
  auto q = compute_quotient(span_quotient_input(s, witnesses, bound));
  if (!q.safety.ok()) {
    throw Error(safety_error_kind(q.safety), q.safety.diagnostics.front().message, q.safety);
  }

  ValidationReport morphisms;
  for (auto const* m : {&s.left, &s.right}) {
    for (auto d : check_morphism(*m, bound).diagnostics) {
      d.subject = (m == &s.left ? "left:" : "right:") + d.subject;
      morphisms.diagnostics.push_back(std::move(d));
    }
  }
  if (!morphisms.ok()) {
    throw Error(ErrorKind::invalid_morphism,
                "span morphism fails its checks: " + morphisms.diagnostics.front().message,
                morphisms);
  }

  PushoutResult r;
  r.glued = q.glued;
  r.inj_left = injection(s.left.target, q.glued, 0, q);
  r.inj_right = injection(s.right.target, q.glued, 1, q);
  r.type_classes = q.sigil_classes;
  r.symbol_classes = q.symbol_classes;
  for (auto w : q.witnesses_used) r.witnesses_used.push_back(witnesses[w]);
  r.safety = q.safety;
  return r;
}

std::vector<TypeUniverse> candidate_universes(std::vector<BaseType> const& bases,
                                              std::size_t max_sigils) {
  std::vector<TypeUniverse> out;
  for (std::size_t k = 1; k <= max_sigils; ++k) {
    detail::for_each_function(k, bases.size(), [&](std::vector<std::size_t> const& choice) {
      TypeUniverse u;
      for (std::size_t i = 0; i < k; ++i) u.sigils.push_back({"e" + std::to_string(i), bases[choice[i]]});
      out.push_back(std::move(u));
      return true;
    });
  }
  return out;
}

namespace {

std::vector<BaseType> distinct_bases(Dsl const& d) {
  std::vector<BaseType> out;
  for (auto b : all_base_types) {
    if (std::any_of(d.universe.sigils.begin(), d.universe.sigils.end(),
                    [&](auto const& s) { return s.base == b; })) {
      out.push_back(b);
    }
  }
  return out;
}

std::string render_map(Dsl const& d, std::vector<std::size_t> const& map, TypeUniverse const& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < map.size(); ++i) {
    out += (i ? ", " : "") + d.universe.sigils[i].name + "->" + e.sigils[map[i]].name;
  }
  return out + "}";
}

// Signature of each symbol of d pushed along the sigil map k into E.
std::vector<std::vector<std::size_t>> pushed_signatures(Dsl const& d, std::vector<std::size_t> const& k) {
  std::vector<std::vector<std::size_t>> out;
  for (auto const& f : d.symbols) {
    std::vector<std::size_t> sig;
    for (auto const& s : f.signature.domain) sig.push_back(k[*d.universe.find(s)]);
    sig.push_back(k[*d.universe.find(f.signature.codomain)]);
    out.push_back(std::move(sig));
  }
  return out;
}

}  // namespace

UniversalityReport verify_universal_property(PushoutResult const& p, Span const& s,
                                             std::size_t max_target_sigils, std::size_t ceiling) {
  if (max_target_sigils > max_universal_targets) {
    throw Error(ErrorKind::precondition_violation,
                "universal-property search is capped at " +
                    std::to_string(max_universal_targets) + " target sigils");
  }
  UniversalityReport report;
  auto const& left = s.left.target;
  auto const& right = s.right.target;
  auto const& glued = p.glued;

  for (auto const* inj : {&p.inj_left, &p.inj_right}) {
    for (auto d : check_morphism_structure(*inj).diagnostics) {
      d.subject = (inj == &p.inj_left ? "inj_left:" : "inj_right:") + d.subject;
      report.diagnostics.push_back(std::move(d));
    }
  }
  if (!report.ok()) return report;

  for (auto const& z : s.apex.universe.sigils) {
    auto const& via_left = p.inj_left.map_sigil(s.left.map_sigil(z.name));
    auto const& via_right = p.inj_right.map_sigil(s.right.map_sigil(z.name));
    if (via_left != via_right) {
      report.add("non-commuting-square", z.name,
                 "square does not commute at sigil " + z.name + ": " + via_left + " vs " + via_right);
    }
  }
  for (auto const& f : s.apex.symbols) {
    auto const& via_left = p.inj_left.map_symbol(s.left.map_symbol(f.name));
    auto const& via_right = p.inj_right.map_symbol(s.right.map_symbol(f.name));
    if (via_left != via_right) {
      report.add("non-commuting-square", f.name,
                 "square does not commute at symbol " + f.name + ": " + via_left + " vs " + via_right);
    }
  }
  if (!report.ok()) return report;

  // Index forms of the span and injections.
  auto sigil_idx = [](Dsl const& d, std::string const& n) { return *d.universe.find(n); };
  auto symbol_idx = [](Dsl const& d, std::string const& n) { return *d.find_symbol(n); };
  std::vector<std::pair<std::size_t, std::size_t>> apex_sigils, apex_symbols;
  for (auto const& z : s.apex.universe.sigils) {
    apex_sigils.push_back({sigil_idx(left, s.left.map_sigil(z.name)), sigil_idx(right, s.right.map_sigil(z.name))});
  }
  for (auto const& f : s.apex.symbols) {
    apex_symbols.push_back({symbol_idx(left, s.left.map_symbol(f.name)), symbol_idx(right, s.right.map_symbol(f.name))});
  }
  std::vector<std::size_t> h_left, h_right, hf_left, hf_right;
  for (auto const& x : left.universe.sigils) h_left.push_back(sigil_idx(glued, p.inj_left.map_sigil(x.name)));
  for (auto const& x : right.universe.sigils) h_right.push_back(sigil_idx(glued, p.inj_right.map_sigil(x.name)));
  for (auto const& f : left.symbols) hf_left.push_back(symbol_idx(glued, p.inj_left.map_symbol(f.name)));
  for (auto const& f : right.symbols) hf_right.push_back(symbol_idx(glued, p.inj_right.map_symbol(f.name)));

  detail::SearchBudget budget(ceiling);
  constexpr std::size_t max_reported = 8;

  for (auto const& e : candidate_universes(distinct_bases(glued), max_target_sigils)) {
    detail::for_each_sigil_map(detail::bases_of(left.universe), e, [&](std::vector<std::size_t> const& k_left) {
      return detail::for_each_sigil_map(detail::bases_of(right.universe), e, [&](std::vector<std::size_t> const& k_right) {
        budget.spend();
        for (auto [l, r] : apex_sigils) {
          if (k_left[l] != k_right[r]) return true;
        }
        ++report.cocones;

        std::size_t mediators = 0;
        std::vector<std::size_t> mediator;
        detail::for_each_sigil_map(detail::bases_of(glued.universe), e, [&](std::vector<std::size_t> const& u) {
          budget.spend();
          for (std::size_t x = 0; x < h_left.size(); ++x) {
            if (u[h_left[x]] != k_left[x]) return true;
          }
          for (std::size_t x = 0; x < h_right.size(); ++x) {
            if (u[h_right[x]] != k_right[x]) return true;
          }
          if (++mediators == 1) mediator = u;
          return true;
        });
        if (mediators != 1) {
          report.add(mediators == 0 ? "missing-mediator" : "non-unique-mediator", "cocone",
                     std::to_string(mediators) + " mediating maps for cocone " +
                         render_map(left, k_left, e) + " / " + render_map(right, k_right, e));
          return report.diagnostics.size() < max_reported;
        }

        // Symbol level: E carries one symbol per glued class with the pushed signature.
        auto sig_left = pushed_signatures(left, k_left);
        auto sig_right = pushed_signatures(right, k_right);
        std::vector<std::vector<std::size_t>> e_sigs(glued.symbols.size());
        std::vector<bool> seen(glued.symbols.size(), false);
        bool well_defined = true;
        auto record = [&](std::size_t g, std::vector<std::size_t> const& sig) {
          if (!seen[g]) {
            seen[g] = true;
            e_sigs[g] = sig;
          } else if (e_sigs[g] != sig) {
            well_defined = false;
          }
        };
        for (std::size_t f = 0; f < hf_left.size(); ++f) record(hf_left[f], sig_left[f]);
        for (std::size_t f = 0; f < hf_right.size(); ++f) record(hf_right[f], sig_right[f]);
        for (auto [l, r] : apex_symbols) {
          if (hf_left[l] != hf_right[r]) well_defined = false;
        }
        if (!well_defined || glued.symbols.empty()) return true;
        ++report.symbol_cocones;

        auto glued_sigs = pushed_signatures(glued, mediator);
        std::size_t symbol_mediators = 0;
        detail::for_each_function(glued.symbols.size(), glued.symbols.size(), [&](std::vector<std::size_t> const& uf) {
          budget.spend();
          for (std::size_t f = 0; f < hf_left.size(); ++f) {
            if (uf[hf_left[f]] != hf_left[f]) return true;
          }
          for (std::size_t f = 0; f < hf_right.size(); ++f) {
            if (uf[hf_right[f]] != hf_right[f]) return true;
          }
          for (std::size_t g = 0; g < uf.size(); ++g) {
            if (e_sigs[uf[g]] != glued_sigs[g]) return true;
          }
          ++symbol_mediators;
          return true;
        });
        if (symbol_mediators != 1) {
          report.add(symbol_mediators == 0 ? "missing-mediator" : "non-unique-mediator", "symbols",
                     std::to_string(symbol_mediators) + " mediating symbol maps for cocone " +
                         render_map(left, k_left, e) + " / " + render_map(right, k_right, e));
          return report.diagnostics.size() < max_reported;
        }
        return true;
      });
    });
    if (report.diagnostics.size() >= max_reported) break;
  }
  report.candidates = budget.spent();
  return report;
}

}  // namespace opglue
