#include "doctest.h"
#include "opglue/json.hpp"
#include "support.hpp"

using namespace opglue;
using opglue::json::Json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::io_error;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("DSLs round-trip") {
    for (auto const& name : testing::packaged_dsls()) {
      auto d = files::load_dsl(testing::data_path(name));
      auto j = json::to_json(d);
      CHECK(json::dsl_from_json(j) == d);
      CHECK(json::to_json(json::dsl_from_json(j)) == j);
    }
  }

  TEST_CASE("unknown fields are rejected") {
    auto j = json::to_json(testing::dslu());
    j["comment"] = "hello";
    CHECK(kind_of([&] { json::dsl_from_json(j); }) == ErrorKind::parse_error);
    auto k = json::to_json(testing::dslu());
    k["types"][0]["note"] = 1;
    CHECK(kind_of([&] { json::dsl_from_json(k); }) == ErrorKind::parse_error);
    auto t = Json::parse(R"({"gen": "fprint", "extra": true})");
    CHECK(kind_of([&] { json::operad_term_from_json(t); }) == ErrorKind::parse_error);
  }

  TEST_CASE("missing fields and bad tags are rejected") {
    auto j = json::to_json(testing::dslu());
    j.erase("functions");
    CHECK(kind_of([&] { json::dsl_from_json(j); }) == ErrorKind::parse_error);
    auto k = json::to_json(testing::dslu());
    k["types"][0]["base"] = "integer";
    CHECK(kind_of([&] { json::dsl_from_json(k); }) == ErrorKind::parse_error);
    CHECK(kind_of([&] { json::value_from_json(Json::parse(R"({"base": "natural", "value": -1})")); }) ==
          ErrorKind::parse_error);
  }

  TEST_CASE("values") {
    CHECK(json::value_from_json(Json::parse(R"({"base": "natural", "value": 7})")) == Value(7));
    CHECK(json::value_from_json(Json::parse(R"({"base": "boolean", "value": true})")) == Value(true));
    CHECK(json::value_from_json(Json::parse(R"({"base": "unit", "value": null})")) == Value(Unit{}));
    auto fm = json::value_from_json(Json::parse(R"({"base": "fieldmap", "value": {"g": "1", "f": ""}})"));
    CHECK(fm == Value(FieldMap{{"f", ""}, {"g", "1"}}));
    Value big(Natural(1) << 80);
    CHECK(json::value_from_json(json::to_json(big)) == big);
    CHECK(json::payload(Value("us")).dump() == "\"us\"");
    for (auto t : all_base_types) {
      for (auto const& v : enumerate_carrier(t, 3)) CHECK(json::value_from_json(json::to_json(v)) == v);
    }
  }

  TEST_CASE("terms round-trip") {
    auto t = files::load_term(testing::data_path("firstn.term.json"));
    CHECK(json::operad_term_from_json(json::to_json(t)) == t);
    auto u = testing::dslu();
    auto p = permute_term(u, graft(u, t, 0, unit_term(u, "nat")), Permutation({1, 0}));
    CHECK(json::operad_term_from_json(json::to_json(p)) == p);
  }

  TEST_CASE("pushout records round-trip") {
    for (auto const& name : {"dslu_dslp.glue.json", "dslu_dslp_fprint.glue.json"}) {
      auto g = files::load_glue(testing::data_path(name));
      json::PushoutRecord rec{g.span, g.witnesses, 3, pushout(g.span, g.witnesses, 3)};
      auto j = json::to_json(rec);
      auto back = json::pushout_record_from_json(j);
      CHECK(back.result.glued == rec.result.glued);
      CHECK(back.result.type_classes == rec.result.type_classes);
      CHECK(back.result.inj_left == rec.result.inj_left);
      CHECK(json::to_json(back) == j);
    }
  }

  TEST_CASE("colimit records round-trip") {
    for (auto const& name : testing::packaged_diagrams()) {
      auto d = files::load_diagram(testing::data_path(name));
      json::ColimitRecord rec{d.diagram, d.witnesses, 3, colimit(d.diagram, d.witnesses, 3)};
      auto j = json::to_json(rec);
      CHECK(json::to_json(json::colimit_record_from_json(j)) == j);
    }
  }

  TEST_CASE("file errors") {
    CHECK(kind_of([] { files::load_dsl(testing::data_path("missing.dsl.json")); }) == ErrorKind::io_error);
    CHECK(kind_of([] { files::read_json(testing::data_path("../CMakeLists.txt")); }) == ErrorKind::parse_error);
    CHECK(files::sibling_report_path("out/x.dsl.json", ".pushout.json") == "out/x.pushout.json");
  }
}
