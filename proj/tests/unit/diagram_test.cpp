#include <algorithm>

#include "doctest.h"
#include "opglue/diagram.hpp"
#include "support.hpp"

using namespace opglue;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::parse_error;
}

files::DiagramSpec diagram(std::string const& name) {
  return files::load_diagram(testing::data_path(name));
}

ColimitResult diagram_result(std::string const& name) {
  auto d = diagram(name);
  return colimit(d.diagram, d.witnesses, d.bound.value_or(3));
}

bool has_kind(ValidationReport const& r, std::string const& kind) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](auto const& d) { return d.kind == kind; });
}

Diagram edge_free(std::vector<std::pair<std::string, Dsl>> nodes) {
  Diagram d;
  for (auto& [name, dsl] : nodes) {
    d.shape.objects.push_back(name);
    d.nodes.push_back(dsl);
  }
  return d;
}

// Three natural sigils a.x, b.y, c.w joined through two connector objects.
Diagram zigzag() {
  auto z = testing::single_sigil("Z", "z", BaseType::natural);
  Diagram d;
  d.shape.objects = {"a", "z1", "b", "z2", "c"};
  d.nodes = {testing::single_sigil("A", "x", BaseType::natural), z,
             testing::single_sigil("B", "y", BaseType::natural), z,
             testing::single_sigil("C", "w", BaseType::natural)};
  d.shape.edges = {{"p", "z1", "a"}, {"q", "z1", "b"}, {"r", "z2", "b"}, {"s", "z2", "c"}};
  d.morphisms = {testing::morphism(z, d.nodes[0], {{"z", "x"}}), testing::morphism(z, d.nodes[2], {{"z", "y"}}),
                 testing::morphism(z, d.nodes[2], {{"z", "y"}}), testing::morphism(z, d.nodes[4], {{"z", "w"}})};
  return d;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("packaged diagrams validate") {
    for (auto const& name : testing::packaged_diagrams()) {
      auto d = diagram(name);
      CHECK(validate_diagram(d.diagram, 3).ok());
    }
  }

  TEST_CASE("an edge whose morphism starts elsewhere") {
    auto d = diagram("span.diag.json").diagram;
    d.morphisms[0].source = testing::dslu();
    auto r = validate_diagram(d, 3);
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics[0].kind == "source-mismatch");
    CHECK(r.diagnostics[0].subject == "left_map");
    CHECK(kind_of([&] { colimit(d, {}, 3); }) == ErrorKind::invalid_diagram);
  }

  TEST_CASE("shape problems") {
    auto d = diagram("span.diag.json").diagram;
    d.shape.edges[1].to = "nowhere";
    CHECK(has_kind(validate_diagram(d, 3), "unknown-object"));
    auto e = diagram("span.diag.json").diagram;
    e.morphisms.pop_back();
    CHECK(has_kind(validate_diagram(e, 3), "edge-count"));
    CHECK(has_kind(validate_diagram(Diagram{}, 3), "empty-shape"));
    auto f = diagram("span.diag.json").diagram;
    f.morphisms[1].type_map["z"] = "s";
    CHECK(has_kind(validate_diagram(f, 3), "denotation-mismatch"));
  }

  TEST_CASE("colimit of the span") {
    auto r = diagram_result("span.diag.json");
    CHECK(r.colimit.name == "DSLU+DSLP");
    std::vector<std::string> names;
    for (auto const& c : r.sigil_classes) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"nat+i", "str", "s", "p"});
    CHECK(r.sigil_classes[0].members ==
          std::vector<ClassMember>{{"left", "nat"}, {"apex", "z"}, {"right", "i"}});
    CHECK(r.legs[1].map_sigil("z") == "nat+i");
  }

  TEST_CASE("colimit of the discrete diagram") {
    auto r = diagram_result("discrete.diag.json");
    CHECK(r.colimit.universe.sigils.size() == 5);
    CHECK(r.colimit.symbols.size() == 4);
    CHECK(r.colimit.universe.names() == std::vector<std::string>{"nat", "str", "i", "s", "p"});
  }

  TEST_CASE("colimit of a single object is the object") {
    auto r = diagram_result("point.diag.json");
    CHECK(r.colimit == testing::dslu());
    CHECK(is_isomorphism(r.legs[0], 3));
  }

  TEST_CASE("objects with outgoing edges do not name classes") {
    auto z = files::load_dsl(testing::data_path("z_nat.dsl.json"));
    Diagram d;
    d.shape.objects = {"z", "u"};
    d.shape.edges = {{"e", "z", "u"}};
    d.nodes = {z, testing::dslu()};
    d.morphisms = {testing::morphism(z, testing::dslu(), {{"z", "nat"}})};
    auto r = colimit(d, {}, 3);
    CHECK(r.colimit.name == "DSLU");
    CHECK(r.colimit.universe.names() == std::vector<std::string>{"nat", "str"});
  }

  TEST_CASE("coproduct sizes") {
    auto d = edge_free({{"u", testing::dslu()}, {"p", testing::dslp()}, {"b", testing::bnu()}});
    auto r = colimit(d, {}, 3);
    CHECK(r.colimit.universe.sigils.size() == 2 + 3 + 3);
    CHECK(r.colimit.symbols.size() == 2 + 2 + 2);
    CHECK(r.colimit.universe.names() ==
          std::vector<std::string>{"nat", "str", "i", "s", "p", "b", "n", "u"});
    std::vector<std::string> symbols;
    for (auto const& f : r.colimit.symbols) symbols.push_back(f.name);
    CHECK(symbols == std::vector<std::string>{"fprint", "finput", "ffields", "fprint'", "eqNat", "addNat"});
  }

  TEST_CASE("classes agree with a naive closure") {
    for (auto const& name : testing::packaged_diagrams()) {
      auto d = diagram(name);
      auto r = colimit(d.diagram, d.witnesses, 3);
      CHECK(testing::partition_of(r.sigil_classes) == testing::diagram_sigil_oracle(d.diagram));
    }
    auto z = zigzag();
    auto r = colimit(z, {{{"a", "x"}, {"b", "y"}, BaseType::natural}, {{"b", "y"}, {"c", "w"}, BaseType::natural}}, 3);
    CHECK(testing::partition_of(r.sigil_classes) == testing::diagram_sigil_oracle(z));
    CHECK(r.sigil_classes.size() == 1);
    CHECK(r.sigil_classes[0].name == "x+y+w");
  }

  TEST_CASE("multi-way merges need a witness chain") {
    auto z = zigzag();
    try {
      colimit(z, {{{"a", "x"}, {"b", "y"}, BaseType::natural}}, 3);
      FAIL("expected safety-violation");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::safety_violation);
      CHECK(e.report().diagnostics[0].kind == "missing-witness");
    }
  }

  TEST_CASE("cocones commute") {
    for (auto const& name : testing::packaged_diagrams()) {
      auto d = diagram(name);
      auto r = colimit(d.diagram, d.witnesses, 3);
      CHECK(check_cocone(d.diagram, r).ok());
    }
  }

  TEST_CASE("a corrupted leg breaks the cocone") {
    auto d = diagram("span.diag.json");
    auto r = colimit(d.diagram, d.witnesses, 3);
    r.legs[2].type_map["i"] = "s";
    auto report = check_cocone(d.diagram, r);
    REQUIRE_FALSE(report.ok());
    CHECK(report.diagnostics[0].kind == "non-commuting-cocone");
    CHECK(report.diagnostics[0].subject == "right_map");
  }

  TEST_CASE("legs are morphisms") {
    for (auto const& name : testing::packaged_diagrams()) {
      auto d = diagram(name);
      auto r = colimit(d.diagram, d.witnesses, 3);
      for (auto const& leg : r.legs) CHECK(check_morphism(leg, 3).ok());
    }
  }

  TEST_CASE("span diagrams agree with pushouts") {
    for (auto const& name : testing::packaged_glues()) {
      CAPTURE(name);
      auto g = files::load_glue(testing::data_path(name));
      auto d = span_diagram(g.span);
      auto w = span_witnesses(g.witnesses);
      if (name == "bad-structstr.glue.json") {
        CHECK(kind_of([&] { colimit(d, w, 3); }) == ErrorKind::safety_violation);
        continue;
      }
      auto p = pushout(g.span, g.witnesses, 3);
      auto c = colimit(d, w, 3);
      CHECK(testing::without_object(testing::partition_of(c.sigil_classes), apex_label) ==
            testing::partition_of(p.type_classes));
      CHECK(testing::without_object(testing::partition_of(c.symbol_classes), apex_label) ==
            testing::partition_of(p.symbol_classes));
      std::map<std::string, std::string> same{{"left", "left"}, {"right", "right"}};
      auto sigils = testing::class_bijection(p.type_classes, c.sigil_classes, same);
      auto symbols = testing::class_bijection(p.symbol_classes, c.symbol_classes, same);
      CHECK(testing::sorted(testing::renamed(p.glued, sigils, symbols)) == testing::sorted(c.colimit));
    }
  }

  TEST_CASE("colimits are idempotent") {
    for (auto const& name : testing::packaged_diagrams()) {
      auto first = diagram_result(name);
      auto again = colimit(edge_free({{"only", first.colimit}}), {}, 3);
      CHECK(again.colimit == first.colimit);
      for (auto const& c : again.sigil_classes) CHECK(c.members.size() == 1);
      CHECK(is_isomorphism(again.legs[0], 3));
    }
  }

  TEST_CASE("edge order does not matter") {
    auto d = diagram("span.diag.json");
    auto a = colimit(d.diagram, d.witnesses, 3);
    auto flipped = d.diagram;
    std::reverse(flipped.shape.edges.begin(), flipped.shape.edges.end());
    std::reverse(flipped.morphisms.begin(), flipped.morphisms.end());
    auto b = colimit(flipped, d.witnesses, 3);
    CHECK(testing::partition_of(a.sigil_classes) == testing::partition_of(b.sigil_classes));
    CHECK(testing::partition_of(a.symbol_classes) == testing::partition_of(b.symbol_classes));
    CHECK(testing::sorted(a.colimit) == testing::sorted(b.colimit));
    auto z = zigzag();
    std::vector<DiagramWitness> w{{{"a", "x"}, {"b", "y"}, BaseType::natural},
                                  {{"b", "y"}, {"c", "w"}, BaseType::natural}};
    auto za = colimit(z, w, 3);
    std::reverse(z.shape.edges.begin(), z.shape.edges.end());
    std::reverse(z.morphisms.begin(), z.morphisms.end());
    CHECK(testing::sorted(colimit(z, w, 3).colimit) == testing::sorted(za.colimit));
  }

  TEST_CASE("the colimit is universal among small cocones") {
    auto discrete = diagram("discrete.diag.json");
    auto rd = colimit(discrete.diagram, discrete.witnesses, 3);
    CHECK(verify_colimit_universal(rd, discrete.diagram, 2).ok());

    auto span = diagram("span.diag.json");
    auto rs = colimit(span.diagram, span.witnesses, 3);
    auto us = verify_colimit_universal(rs, span.diagram, 3);
    CHECK(us.ok());
    auto g = files::load_glue(testing::data_path("dslu_dslp.glue.json"));
    auto up = verify_universal_property(pushout(g.span, g.witnesses, 3), g.span, 3);
    CHECK(up.ok());
    CHECK(us.cocones == up.cocones);
    CHECK(kind_of([&] { verify_colimit_universal(rs, span.diagram, 4); }) == ErrorKind::precondition_violation);
  }

  TEST_CASE("a corrupted colimit fails universality") {
    auto span = diagram("span.diag.json");
    auto r = colimit(span.diagram, span.witnesses, 3);
    r.legs[2].type_map["i"] = "s";
    CHECK_FALSE(verify_colimit_universal(r, span.diagram, 2).ok());
  }
}
