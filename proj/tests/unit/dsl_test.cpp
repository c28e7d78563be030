#include <string>

#include "doctest.h"
#include "opglue/dsl.hpp"
#include "opglue/error.hpp"
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

// One sigil per base type and one symbol per builtin.
Dsl catalog_dsl() {
  Dsl d;
  d.name = "Catalog";
  for (auto t : all_base_types) d.universe.sigils.push_back({"t_" + std::string(to_string(t)), t});
  auto sigil = [](BaseType t) { return "t_" + std::string(to_string(t)); };
  for (auto const& b : builtin_catalog()) {
    Signature sig;
    for (auto t : b.domain) sig.domain.push_back(sigil(t));
    sig.codomain = sigil(b.codomain);
    d.symbols.push_back({"f_" + std::string(b.name), sig, TermExpr::builtin(std::string(b.name))});
  }
  return d;
}

}  // namespace

TEST_SUITE("dsl") {
  TEST_CASE("packaged DSLs validate") {
    for (auto const& name : testing::packaged_dsls()) {
      CAPTURE(name);
      CHECK(validate_dsl(files::load_dsl(testing::data_path(name))).ok());
    }
  }

  TEST_CASE("signature over an undeclared sigil") {
    auto d = testing::dslu();
    d.symbols[0].signature.domain[0] = "q";
    auto r = validate_dsl(d);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].kind == "unknown-sigil");
    CHECK(r.diagnostics[0].subject == "fprint");
    CHECK(r.diagnostics[0].message == "unknown sigil q");
    CHECK(kind_of([&] { require_valid(d); }) == ErrorKind::invalid_dsl);
  }

  TEST_CASE("structural violations") {
    auto d = testing::dslu();
    d.universe.sigils.push_back({"nat", BaseType::boolean});
    d.symbols.push_back(d.symbols[1]);
    auto r = validate_dsl(d);
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].kind == "duplicate-sigil");
    CHECK(r.diagnostics[1].kind == "duplicate-symbol");
  }

  TEST_CASE("nullary symbols are rejected") {
    auto d = testing::dslu();
    d.symbols.push_back({"k", {{}, "str"}, TermExpr::literal(Value("x"))});
    auto r = validate_dsl(d);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].kind == "nullary-symbol");
  }

  TEST_CASE("ill-typed actions") {
    auto d = testing::dslu();
    d.symbols[1].action = TermExpr::builtin("length");
    d.symbols.push_back({"g", {{"str"}, "str"},
                         TermExpr::apply(TermExpr::builtin("concat"), {TermExpr::arg(0), TermExpr::arg(1)})});
    d.symbols.push_back({"h", {{"str"}, "str"}, TermExpr::builtin("no_such_builtin")});
    auto r = validate_dsl(d);
    REQUIRE(r.diagnostics.size() == 3);
    for (auto const& diag : r.diagnostics) CHECK(diag.kind == "ill-typed-action");
    CHECK(r.diagnostics[0].subject == "finput");
    CHECK(r.diagnostics[1].subject == "g");
    CHECK(r.diagnostics[2].subject == "h");
  }

  TEST_CASE("validation is idempotent") {
    auto d = testing::dslu();
    d.symbols[0].signature.codomain = "nope";
    CHECK(validate_dsl(d) == validate_dsl(d));
    auto ok = testing::bnu();
    CHECK(validate_dsl(ok) == validate_dsl(ok));
  }

  TEST_CASE("denotation") {
    auto d = testing::dslp();
    CHECK(denote_type(d.universe, "i") == BaseType::natural);
    CHECK(denote_type(d.universe, "s") == BaseType::fieldmap);
    CHECK(denote_type(d.universe, "p") == BaseType::string);
    CHECK(kind_of([&] { denote_type(d.universe, "x"); }) == ErrorKind::unknown_sigil);
    for (int k = 0; k < 3; ++k) CHECK(d.denote("i") == BaseType::natural);
  }

  TEST_CASE("evaluating actions") {
    auto u = testing::dslu();
    std::vector<Value> a{Value(3), Value("username")};
    CHECK(eval_action(u, u.symbol("fprint"), a) == Value("use"));
    std::vector<Value> b{Value("abc")};
    CHECK(eval_action(u, u.symbol("finput"), b) == Value("abc"));
    auto n = testing::bnu();
    std::vector<Value> c{Value(2), Value(2)};
    CHECK(eval_action(n, n.symbol("eqNat"), c) == Value(true));
    CHECK(eval_action(n, n.symbol("addNat"), c) == Value(4));
    auto p = testing::dslp();
    std::vector<Value> m{Value(FieldMap{{"zeta", ""}, {"alpha", "1"}, {"mid", "x"}})};
    CHECK(eval_action(p, p.symbol("ffields"), m) == Value("alpha,mid,zeta"));
  }

  TEST_CASE("prefix longer than the string returns the whole string") {
    auto u = testing::dslu();
    std::vector<Value> a{Value(50), Value("ab")};
    CHECK(eval_action(u, u.symbol("fprint"), a) == Value("ab"));
    std::vector<Value> z{Value(0), Value("ab")};
    CHECK(eval_action(u, u.symbol("fprint"), z) == Value(""));
  }

  TEST_CASE("prefix counts code points") {
    std::vector<Value> a{Value(2), Value("\xc3\xa9t\xc3\xa9")};
    CHECK(apply_builtin("take_prefix", a) == Value("\xc3\xa9t"));
    std::vector<Value> b{Value("\xc3\xa9t\xc3\xa9")};
    CHECK(apply_builtin("length", b) == Value(3));
  }

  TEST_CASE("evaluation errors") {
    auto u = testing::dslu();
    std::vector<Value> one{Value(3)};
    CHECK(kind_of([&] { eval_action(u, u.symbol("fprint"), one); }) == ErrorKind::arity_mismatch);
    std::vector<Value> swapped{Value("x"), Value(3)};
    CHECK(kind_of([&] { eval_action(u, u.symbol("fprint"), swapped); }) == ErrorKind::type_mismatch);
    CHECK(kind_of([&] { apply_builtin("nope", one); }) == ErrorKind::unknown_builtin);
    CHECK(kind_of([&] { u.symbol("nope"); }) == ErrorKind::unknown_symbol);
  }

  TEST_CASE("literals and applications") {
    Dsl d = testing::dslu();
    d.symbols.push_back(
        {"greet", {{"str"}, "str"},
         TermExpr::apply(TermExpr::builtin("concat"), {TermExpr::literal(Value("hi ")), TermExpr::arg(0)})});
    d.symbols.push_back(
        {"short", {{"str", "nat"}, "str"},
         TermExpr::apply(TermExpr::builtin("take_prefix"), {TermExpr::arg(1), TermExpr::arg(0)})});
    REQUIRE(validate_dsl(d).ok());
    std::vector<Value> a{Value("bo")};
    CHECK(eval_action(d, d.symbol("greet"), a) == Value("hi bo"));
    std::vector<Value> b{Value("abc"), Value(1)};
    CHECK(eval_action(d, d.symbol("short"), b) == Value("a"));
  }

  TEST_CASE("every builtin is total on enumerated tuples up to bound 4") {
    auto d = catalog_dsl();
    REQUIRE(validate_dsl(d).ok());
    for (std::size_t bound = 1; bound <= 4; ++bound) {
      for (auto const& f : d.symbols) {
        auto const* info = find_builtin(f.name.substr(2));
        REQUIRE(info != nullptr);
        std::size_t count = 0;
        for_each_tuple(info->domain, bound, [&](std::vector<Value> const& args) {
          auto v = eval_action(d, f, args);
          CHECK(v.type() == info->codomain);
          CHECK(v == eval_action(d, f, args));
          ++count;
          return true;
        });
        CHECK(count == enumerate_tuples(info->domain, bound).size());
      }
    }
  }
}
