#include "opglue/diagram.hpp"

#include <algorithm>
#include <set>

#include "map_search.hpp"

namespace opglue {

std::optional<std::size_t> Shape::find_object(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] == name) return i;
  }
  return std::nullopt;
}

Dsl const& Diagram::node(std::string_view object) const {
  auto idx = shape.find_object(object);
  if (!idx || *idx >= nodes.size()) {
    throw Error(ErrorKind::invalid_diagram, "unknown object " + std::string(object));
  }
  return nodes[*idx];
}

namespace {

ValidationReport check_shape(Diagram const& d) {
  ValidationReport report;
  auto const& shape = d.shape;
  if (shape.objects.empty()) report.add("empty-shape", "shape", "a diagram needs at least one object");
  std::set<std::string> names;
  for (auto const& o : shape.objects) {
    if (!names.insert(o).second) report.add("duplicate-object", o, "duplicate object " + o);
  }
  std::set<std::string> edge_names;
  for (auto const& e : shape.edges) {
    if (!edge_names.insert(e.name).second) report.add("duplicate-edge", e.name, "duplicate edge " + e.name);
    if (!shape.find_object(e.from)) report.add("unknown-object", e.name, "edge " + e.name + " starts at unknown object " + e.from);
    if (!shape.find_object(e.to)) report.add("unknown-object", e.name, "edge " + e.name + " ends at unknown object " + e.to);
  }
  if (d.nodes.size() != shape.objects.size()) {
    report.add("node-count", "diagram", "expected one DSL per object");
  }
  if (d.morphisms.size() != shape.edges.size()) {
    report.add("edge-count", "diagram", "expected one morphism per edge");
  }
  return report;
}

// Shape, node validity, endpoint agreement and morphism structure.
ValidationReport check_structure(Diagram const& d) {
  auto report = check_shape(d);
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    auto v = validate_dsl(d.nodes[i]);
    if (!v.ok()) report.add("invalid-node", d.shape.objects[i], v.diagnostics.front().message);
  }
  for (std::size_t j = 0; j < d.morphisms.size(); ++j) {
    auto const& e = d.shape.edges[j];
    auto const& m = d.morphisms[j];
    if (!(m.source == d.node(e.from))) {
      report.add("source-mismatch", e.name, "edge " + e.name + ": morphism source is not the DSL at " + e.from);
    }
    if (!(m.target == d.node(e.to))) {
      report.add("target-mismatch", e.name, "edge " + e.name + ": morphism target is not the DSL at " + e.to);
    }
    for (auto const& diag : check_morphism_structure(m).diagnostics) {
      report.add(diag.kind, e.name, "edge " + e.name + ": " + diag.message);
    }
  }
  return report;
}

void require_structure(Diagram const& d) {
  auto report = check_structure(d);
  if (!report.ok()) {
    throw Error(ErrorKind::invalid_diagram, "invalid diagram: " + report.diagnostics.front().message, report);
  }
}

std::size_t object_index(Diagram const& d, std::string const& name) {
  auto idx = d.shape.find_object(name);
  if (!idx) throw Error(ErrorKind::invalid_diagram, "unknown object " + name);
  return *idx;
}

}  // namespace

ValidationReport validate_diagram(Diagram const& d, std::size_t bound) {
  auto report = check_structure(d);
  if (!report.ok()) return report;
  for (std::size_t j = 0; j < d.morphisms.size(); ++j) {
    auto const& e = d.shape.edges[j];
    for (auto const& diag : check_morphism(d.morphisms[j], bound).diagnostics) {
      report.add(diag.kind, e.name, "edge " + e.name + ": " + diag.message);
    }
  }
  return report;
}

ColimitResult colimit(Diagram const& d, std::vector<DiagramWitness> const& witnesses,
                      std::size_t bound) {
  if (bound == 0) throw Error(ErrorKind::invalid_bound, "bound must be at least 1");
  require_structure(d);

  std::vector<bool> has_outgoing(d.nodes.size(), false);
  for (auto const& e : d.shape.edges) has_outgoing[object_index(d, e.from)] = true;

  QuotientInput in;
  in.bound = bound;
  std::vector<std::string> sink_names;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    in.parts.push_back({d.shape.objects[i], &d.nodes[i], !has_outgoing[i]});
    if (!has_outgoing[i]) sink_names.push_back(d.nodes[i].name);
  }
  if (sink_names.empty()) {
    for (auto const& n : d.nodes) sink_names.push_back(n.name);
  }
  std::vector<std::string> distinct;
  for (auto const& n : sink_names) {
    if (std::find(distinct.begin(), distinct.end(), n) == distinct.end()) distinct.push_back(n);
  }
  for (auto const& n : distinct) in.name += (in.name.empty() ? "" : "+") + n;

  for (std::size_t j = 0; j < d.morphisms.size(); ++j) {
    auto const& e = d.shape.edges[j];
    auto const& m = d.morphisms[j];
    auto from = object_index(d, e.from);
    auto to = object_index(d, e.to);
    for (std::size_t x = 0; x < m.source.universe.sigils.size(); ++x) {
      auto const& image = m.map_sigil(m.source.universe.sigils[x].name);
      in.sigil_links.push_back({{from, x}, {to, *m.target.universe.find(image)}});
    }
    for (std::size_t f = 0; f < m.source.symbols.size(); ++f) {
      auto const& image = m.map_symbol(m.source.symbols[f].name);
      in.symbol_links.push_back({{from, f}, {to, *m.target.find_symbol(image)}});
    }
  }

  for (auto const& w : witnesses) {
    auto resolve = [&](ClassMember const& ref) -> ElementRef {
      auto obj = object_index(d, ref.object);
      auto idx = d.nodes[obj].universe.find(ref.name);
      if (!idx) throw Error(ErrorKind::unknown_sigil, "unknown sigil " + ref.name + " at object " + ref.object);
      return {obj, *idx};
    };
    in.witnesses.push_back({resolve(w.left), resolve(w.right), w.base});
  }

  auto q = compute_quotient(in);
  if (!q.safety.ok()) {
    throw Error(safety_error_kind(q.safety), q.safety.diagnostics.front().message, q.safety);
  }
  auto full = validate_diagram(d, bound);
  if (!full.ok()) {
    throw Error(ErrorKind::invalid_diagram, "invalid diagram: " + full.diagnostics.front().message, full);
  }

  ColimitResult r;
  r.colimit = q.glued;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    auto const& node = d.nodes[i];
    DslMorphism leg{node, q.glued, {}, {}};
    for (std::size_t x = 0; x < node.universe.sigils.size(); ++x) {
      leg.type_map[node.universe.sigils[x].name] = q.sigil_classes[q.sigil_class_of[i][x]].name;
    }
    for (std::size_t f = 0; f < node.symbols.size(); ++f) {
      leg.symbol_map[node.symbols[f].name] = q.symbol_classes[q.symbol_class_of[i][f]].name;
    }
    r.legs.push_back(std::move(leg));
  }
  r.sigil_classes = q.sigil_classes;
  r.symbol_classes = q.symbol_classes;
  for (auto w : q.witnesses_used) r.witnesses_used.push_back(witnesses[w]);
  r.safety = q.safety;
  return r;
}

ValidationReport check_cocone(Diagram const& d, ColimitResult const& r) {
  ValidationReport report;
  if (r.legs.size() != d.nodes.size()) {
    report.add("leg-count", "colimit", "expected one leg per object");
    return report;
  }
  for (std::size_t j = 0; j < d.shape.edges.size(); ++j) {
    auto const& e = d.shape.edges[j];
    auto const& m = d.morphisms[j];
    auto const& leg_from = r.legs[object_index(d, e.from)];
    auto const& leg_to = r.legs[object_index(d, e.to)];
    try {
      for (auto const& s : m.source.universe.sigils) {
        auto const& direct = leg_from.map_sigil(s.name);
        auto const& around = leg_to.map_sigil(m.map_sigil(s.name));
        if (direct != around) {
          report.add("non-commuting-cocone", e.name,
                     "edge " + e.name + " breaks the cocone at sigil " + s.name + ": " + direct +
                         " vs " + around);
        }
      }
      for (auto const& f : m.source.symbols) {
        auto const& direct = leg_from.map_symbol(f.name);
        auto const& around = leg_to.map_symbol(m.map_symbol(f.name));
        if (direct != around) {
          report.add("non-commuting-cocone", e.name,
                     "edge " + e.name + " breaks the cocone at symbol " + f.name + ": " + direct +
                         " vs " + around);
        }
      }
    } catch (Error const& err) {
      report.add("non-commuting-cocone", e.name, "edge " + e.name + ": " + err.what());
    }
  }
  return report;
}

namespace {

std::vector<BaseType> distinct_bases(Dsl const& d) {
  std::vector<BaseType> out;
  for (auto b : all_base_types) {
    for (auto const& s : d.universe.sigils) {
      if (s.base == b) {
        out.push_back(b);
        break;
      }
    }
  }
  return out;
}

}  // namespace

UniversalityReport verify_colimit_universal(ColimitResult const& r, Diagram const& d,
                                            std::size_t max_target_sigils, std::size_t ceiling) {
  if (max_target_sigils > max_universal_targets) {
    throw Error(ErrorKind::precondition_violation,
                "universal-property search is capped at " +
                    std::to_string(max_universal_targets) + " target sigils");
  }
  UniversalityReport report;
  require_structure(d);
  for (std::size_t i = 0; i < r.legs.size() && i < d.nodes.size(); ++i) {
    for (auto const& diag : check_morphism_structure(r.legs[i]).diagnostics) {
      report.add(diag.kind, d.shape.objects[i], "leg " + d.shape.objects[i] + ": " + diag.message);
    }
  }
  if (!report.ok()) return report;
  report.append(check_cocone(d, r));
  if (!report.ok()) return report;

  auto const& colim = r.colimit;
  auto const objects = d.nodes.size();

  // Edge links and legs as index maps.
  struct EdgeLinks {
    std::size_t from, to;
    std::vector<std::size_t> sigils;
    std::vector<std::size_t> symbols;
  };
  std::vector<EdgeLinks> edges;
  for (std::size_t j = 0; j < d.shape.edges.size(); ++j) {
    auto const& m = d.morphisms[j];
    EdgeLinks links{object_index(d, d.shape.edges[j].from), object_index(d, d.shape.edges[j].to), {}, {}};
    for (auto const& s : m.source.universe.sigils) links.sigils.push_back(*m.target.universe.find(m.map_sigil(s.name)));
    for (auto const& f : m.source.symbols) links.symbols.push_back(*m.target.find_symbol(m.map_symbol(f.name)));
    edges.push_back(std::move(links));
  }
  std::vector<std::vector<std::size_t>> legs(objects), leg_symbols(objects);
  for (std::size_t i = 0; i < objects; ++i) {
    for (auto const& s : d.nodes[i].universe.sigils) legs[i].push_back(*colim.universe.find(r.legs[i].map_sigil(s.name)));
    for (auto const& f : d.nodes[i].symbols) leg_symbols[i].push_back(*colim.find_symbol(r.legs[i].map_symbol(f.name)));
  }

  detail::SearchBudget budget(ceiling);
  constexpr std::size_t max_reported = 8;
  std::vector<std::vector<std::size_t>> cocone(objects);

  auto pushed = [](Dsl const& node, std::vector<std::size_t> const& k, FunctionSymbol const& f) {
    std::vector<std::size_t> sig;
    for (auto const& s : f.signature.domain) sig.push_back(k[*node.universe.find(s)]);
    sig.push_back(k[*node.universe.find(f.signature.codomain)]);
    return sig;
  };

  auto examine = [&](TypeUniverse const& e) {
    ++report.cocones;
    std::size_t mediators = 0;
    std::vector<std::size_t> mediator;
    detail::for_each_sigil_map(detail::bases_of(colim.universe), e, [&](std::vector<std::size_t> const& u) {
      budget.spend();
      for (std::size_t i = 0; i < objects; ++i) {
        for (std::size_t x = 0; x < legs[i].size(); ++x) {
          if (u[legs[i][x]] != cocone[i][x]) return true;
        }
      }
      if (++mediators == 1) mediator = u;
      return true;
    });
    if (mediators != 1) {
      report.add(mediators == 0 ? "missing-mediator" : "non-unique-mediator", "cocone",
                 std::to_string(mediators) + " mediating maps for a cocone into " +
                     std::to_string(e.sigils.size()) + " sigils");
      return;
    }

    std::vector<std::vector<std::size_t>> e_sigs(colim.symbols.size());
    std::vector<bool> seen(colim.symbols.size(), false);
    bool well_defined = true;
    for (std::size_t i = 0; i < objects; ++i) {
      for (std::size_t f = 0; f < d.nodes[i].symbols.size(); ++f) {
        auto sig = pushed(d.nodes[i], cocone[i], d.nodes[i].symbols[f]);
        auto g = leg_symbols[i][f];
        if (!seen[g]) {
          seen[g] = true;
          e_sigs[g] = std::move(sig);
        } else if (e_sigs[g] != sig) {
          well_defined = false;
        }
      }
    }
    if (!well_defined || colim.symbols.empty()) return;
    ++report.symbol_cocones;

    std::vector<std::vector<std::size_t>> colim_sigs;
    for (auto const& g : colim.symbols) colim_sigs.push_back(pushed(colim, mediator, g));
    std::size_t symbol_mediators = 0;
    detail::for_each_function(colim.symbols.size(), colim.symbols.size(), [&](std::vector<std::size_t> const& uf) {
      budget.spend();
      for (std::size_t i = 0; i < objects; ++i) {
        for (std::size_t f = 0; f < leg_symbols[i].size(); ++f) {
          if (uf[leg_symbols[i][f]] != leg_symbols[i][f]) return true;
        }
      }
      for (std::size_t g = 0; g < uf.size(); ++g) {
        if (e_sigs[uf[g]] != colim_sigs[g]) return true;
      }
      ++symbol_mediators;
      return true;
    });
    if (symbol_mediators != 1) {
      report.add(symbol_mediators == 0 ? "missing-mediator" : "non-unique-mediator", "symbols",
                 std::to_string(symbol_mediators) + " mediating symbol maps for a cocone into " +
                     std::to_string(e.sigils.size()) + " sigils");
    }
  };

  for (auto const& e : candidate_universes(distinct_bases(colim), max_target_sigils)) {
    // Assign legs object by object, pruning on every edge whose ends are fixed.
    auto assign = [&](auto&& self, std::size_t i) -> bool {
      if (i == objects) {
        examine(e);
        return report.diagnostics.size() < max_reported;
      }
      return detail::for_each_sigil_map(detail::bases_of(d.nodes[i].universe), e, [&](std::vector<std::size_t> const& k) {
        budget.spend();
        cocone[i] = k;
        for (auto const& link : edges) {
          auto last = std::max(link.from, link.to);
          if (last != i) continue;
          for (std::size_t x = 0; x < link.sigils.size(); ++x) {
            if (cocone[link.to][link.sigils[x]] != cocone[link.from][x]) return true;
          }
        }
        return self(self, i + 1);
      });
    };
    if (!assign(assign, 0)) break;
  }
  report.candidates = budget.spent();
  return report;
}

Diagram span_diagram(Span const& s) {
  Diagram d;
  d.shape.objects = {left_label, apex_label, right_label};
  d.shape.edges = {{"left_map", apex_label, left_label}, {"right_map", apex_label, right_label}};
  d.nodes = {s.left.target, s.apex, s.right.target};
  d.morphisms = {s.left, s.right};
  return d;
}

std::vector<DiagramWitness> span_witnesses(std::vector<GlueWitness> const& witnesses) {
  std::vector<DiagramWitness> out;
  for (auto const& w : witnesses) {
    out.push_back({{left_label, w.left_sigil}, {right_label, w.right_sigil}, w.base});
  }
  return out;
}

}  // namespace opglue
