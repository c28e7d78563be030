#include "doctest.h"
#include "opglue/laws.hpp"
#include "opglue/operad.hpp"
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

Value eval(Dsl const& d, OperadTerm const& t, std::vector<Value> const& args) {
  return eval_term(d, t, args);
}

std::vector<Dsl> packaged() {
  std::vector<Dsl> out;
  for (auto const& name : testing::packaged_dsls()) out.push_back(files::load_dsl(testing::data_path(name)));
  return out;
}

}  // namespace

TEST_SUITE("operad") {
  TEST_CASE("firstn") {
    auto u = testing::dslu();
    auto firstn = graft(u, generator_term(u, "fprint"), 1, generator_term(u, "finput"));
    CHECK(profile_of(u, firstn) == Profile{"str", {"nat", "str"}});
    CHECK(eval(u, firstn, {Value(2), Value("username")}) == Value("us"));
    CHECK(to_display(firstn) == "(fprint o1 finput)");
    CHECK(graft_depth(firstn) == 1);
    CHECK(files::load_term(testing::data_path("firstn.term.json")) == firstn);
  }

  TEST_CASE("units") {
    auto u = testing::dslu();
    auto one = unit_term(u, "str");
    CHECK(profile_of(u, one) == Profile{"str", {"str"}});
    CHECK(eval(u, one, {Value("ab")}) == Value("ab"));
    CHECK(kind_of([&] { unit_term(u, "q"); }) == ErrorKind::unknown_sigil);
    CHECK(kind_of([&] { generator_term(u, "q"); }) == ErrorKind::unknown_symbol);
  }

  TEST_CASE("grafting into a slot of the wrong color") {
    auto u = testing::dslu();
    auto f = generator_term(u, "fprint");
    CHECK(kind_of([&] { graft(u, f, 0, generator_term(u, "finput")); }) == ErrorKind::color_mismatch);
    CHECK(kind_of([&] { graft(u, f, 2, generator_term(u, "finput")); }) == ErrorKind::index_out_of_range);
    auto raw = OperadTerm::make_graft(f, 0, generator_term(u, "finput"));
    CHECK(kind_of([&] { profile_of(u, raw); }) == ErrorKind::ill_colored_term);
  }

  TEST_CASE("grafting splices the inner inputs") {
    auto u = testing::dslu();
    auto f = generator_term(u, "fprint");
    auto t = graft(u, f, 1, f);
    CHECK(profile_of(u, t) == Profile{"str", {"nat", "nat", "str"}});
    CHECK(eval(u, t, {Value(1), Value(3), Value("abcd")}) == Value("a"));
    CHECK(eval(u, t, {Value(3), Value(2), Value("abcd")}) == Value("ab"));
  }

  TEST_CASE("evaluation checks its arguments") {
    auto u = testing::dslu();
    auto f = generator_term(u, "fprint");
    CHECK(kind_of([&] { eval(u, f, {Value(1)}); }) == ErrorKind::arity_mismatch);
    CHECK(kind_of([&] { eval(u, f, {Value("a"), Value("b")}); }) == ErrorKind::type_mismatch);
  }

  TEST_CASE("permuting inputs") {
    auto u = testing::dslu();
    auto f = generator_term(u, "fprint");
    auto swapped = permute_term(u, f, Permutation({1, 0}));
    CHECK(profile_of(u, swapped) == Profile{"str", {"str", "nat"}});
    CHECK(eval(u, swapped, {Value("username"), Value(2)}) == Value("us"));
    CHECK(kind_of([&] { permute_term(u, f, Permutation({0, 1, 2})); }) == ErrorKind::size_mismatch);
    CHECK(kind_of([&] { Permutation({0, 0}); }) == ErrorKind::size_mismatch);
  }

  TEST_CASE("permutation helpers") {
    Permutation s({1, 2, 0});
    CHECK(s.inverse() == Permutation({2, 0, 1}));
    CHECK(compose(s, s.inverse()).is_identity());
    CHECK(compose(s, Permutation({1, 0, 2})) == Permutation({2, 1, 0}));
    CHECK(Permutation::transposition(4, 1, 3) == Permutation({0, 3, 2, 1}));
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(0).size() == 1);
    // (f.swap) o0 g, with g binary, reorders (g0, g1, a0) of f o1 g.
    CHECK(block_permutation(Permutation({1, 0}), 0, 2) == Permutation({1, 2, 0}));
    CHECK(block_permutation(Permutation({1, 0}), 1, 2) == Permutation({2, 0, 1}));
    CHECK(block_permutation(Permutation({0, 1}), 0, 3).is_identity());
    CHECK(block_inset(Permutation({1, 0}), 1, 2) == Permutation({0, 2, 1}));
    CHECK(block_inset(Permutation({1, 0}), 0, 1) == Permutation({1, 0}));
  }

  TEST_CASE("block permutation agrees with evaluation") {
    auto b = testing::bnu();
    auto eq = permute_term(b, generator_term(b, "eqNat"), Permutation({1, 0}));
    auto add = generator_term(b, "addNat");
    auto sigma = Permutation({1, 0});
    for (std::size_t i = 0; i < 2; ++i) {
      auto lhs = graft(b, permute_term(b, generator_term(b, "addNat"), sigma), i, add);
      auto rhs = permute_term(b, graft(b, add, sigma(i), add), block_permutation(sigma, i, 2));
      CHECK(extensionally_equal(b, lhs, rhs, 3, eval_term));
    }
    CHECK(profile_of(b, eq) == Profile{"b", {"n", "n"}});
  }

  TEST_CASE("graft arity is the spliced arity") {
    for (auto const& d : packaged()) {
      auto terms = generated_terms(d, 1);
      for (auto const& f : terms) {
        for (auto const& g : terms) {
          auto pf = profile_of(d, f);
          auto pg = profile_of(d, g);
          for (std::size_t i = 0; i < pf.arity(); ++i) {
            if (pf.inputs[i] != pg.output) continue;
            CHECK(profile_of(d, graft(d, f, i, g)).arity() == pf.arity() + pg.arity() - 1);
          }
        }
      }
    }
  }

  TEST_CASE("graft evaluation is substitution of the inner result") {
    for (auto const& d : packaged()) {
      auto terms = generated_terms(d, 1);
      for (auto const& f : terms) {
        for (auto const& g : terms) {
          auto pf = profile_of(d, f);
          auto pg = profile_of(d, g);
          for (std::size_t i = 0; i < pf.arity(); ++i) {
            if (pf.inputs[i] != pg.output) continue;
            auto t = graft(d, f, i, g);
            auto m = pg.arity();
            for_each_tuple(d.denote(profile_of(d, t).inputs), 3, [&](std::vector<Value> const& args) {
              std::vector<Value> block(args.begin() + i, args.begin() + i + m);
              std::vector<Value> outer(args.begin(), args.begin() + i);
              outer.push_back(eval(d, g, block));
              outer.insert(outer.end(), args.begin() + i + m, args.end());
              CHECK(eval(d, t, args) == eval(d, f, outer));
              return true;
            });
          }
        }
      }
    }
  }

  TEST_CASE("identity and inverse permutations change nothing") {
    for (auto const& d : packaged()) {
      for (auto const& t : generated_terms(d, 1)) {
        auto n = profile_of(d, t).arity();
        CHECK(extensionally_equal(d, permute_term(d, t, Permutation::identity(n)), t, 3, eval_term));
        if (n > 4) continue;
        for (auto const& sigma : all_permutations(n)) {
          auto back = permute_term(d, permute_term(d, t, sigma), sigma.inverse());
          CHECK(extensionally_equal(d, back, t, 3, eval_term));
        }
      }
    }
  }

  TEST_CASE("successive permutations compose") {
    auto u = testing::dslu();
    auto t = graft(u, generator_term(u, "fprint"), 1, generator_term(u, "fprint"));
    for (auto const& s : all_permutations(3)) {
      for (auto const& r : all_permutations(3)) {
        auto twice = permute_term(u, permute_term(u, t, s), r);
        auto once = permute_term(u, t, compose(s, r));
        CHECK(extensionally_equal(u, twice, once, 3, eval_term));
      }
    }
  }

  TEST_CASE("graft depth") {
    auto u = testing::dslu();
    auto f = generator_term(u, "fprint");
    CHECK(graft_depth(f) == 0);
    auto t = graft(u, f, 1, graft(u, f, 1, f));
    CHECK(graft_depth(t) == 2);
    CHECK(graft_depth(permute_term(u, t, Permutation({3, 2, 1, 0}))) == 2);
  }
}
