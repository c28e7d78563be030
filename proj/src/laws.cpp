#include "opglue/laws.hpp"

#include <algorithm>

namespace opglue {

std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::unit: return "unit";
    case Axiom::sequential_associativity: return "sequential-associativity";
    case Axiom::parallel_associativity: return "parallel-associativity";
    case Axiom::equivariance: return "equivariance";
  }
  return "?";
}

bool LawReport::ok() const noexcept {
  return std::all_of(axioms.begin(), axioms.end(), [](auto const& a) { return a.passed(); });
}

AxiomResult const& LawReport::result(Axiom a) const {
  for (auto const& r : axioms) {
    if (r.axiom == a) return r;
  }
  throw Error(ErrorKind::precondition_violation, "axiom not present in report");
}

std::vector<OperadTerm> generated_terms(Dsl const& d, std::size_t depth) {
  std::vector<OperadTerm> terms;
  std::vector<Profile> profiles;
  for (auto const& f : d.symbols) {
    terms.push_back(OperadTerm::make_generator(f.name));
    profiles.push_back({f.signature.codomain, f.signature.domain});
  }
  // Terms [frontier_begin, size) have exactly the previous depth.
  std::size_t frontier_begin = 0;
  for (std::size_t level = 1; level <= depth; ++level) {
    auto const previous = terms.size();
    for (std::size_t a = 0; a < previous; ++a) {
      for (std::size_t b = 0; b < previous; ++b) {
        if (a < frontier_begin && b < frontier_begin) continue;
        for (std::size_t i = 0; i < profiles[a].arity(); ++i) {
          if (profiles[a].inputs[i] != profiles[b].output) continue;
          terms.push_back(OperadTerm::make_graft(terms[a], i, terms[b]));
          profiles.push_back(profile_of(d, terms.back()));
        }
      }
    }
    frontier_begin = previous;
  }
  return terms;
}

namespace {

using SideEvaluator = std::function<Value(std::span<Value const>)>;

SideEvaluator side(TermEvaluator const& eval, Dsl const& d, OperadTerm const& t) {
  if (!eval) return CompiledTerm(d, t);
  return [&eval, &d, &t](std::span<Value const> args) { return eval(d, t, args); };
}

struct Outcome {
  std::optional<Value> value;
  std::string error;
};

Outcome attempt(SideEvaluator const& eval, std::vector<Value> const& args) {
  try {
    return {eval(args), {}};
  } catch (Error const& e) {
    return {std::nullopt, std::string("error: ") + e.what()};
  }
}

std::string render(Outcome const& o) { return o.value ? to_display(*o.value) : o.error; }

}  // namespace

bool extensionally_equal(Dsl const& d, OperadTerm const& lhs, OperadTerm const& rhs,
                         std::size_t bound, TermEvaluator const& eval,
                         Counterexample* witness) {
  auto lp = profile_of(d, lhs);
  auto rp = profile_of(d, rhs);
  if (lp != rp) {
    if (witness) {
      *witness = {"profile", to_display(lhs), to_display(rhs), {}, "profile differs",
                  "profile differs"};
    }
    return false;
  }
  auto const left = side(eval, d, lhs);
  auto const right = side(eval, d, rhs);
  bool equal = true;
  for_each_tuple(d.denote(lp.inputs), bound, [&](std::vector<Value> const& args) {
    auto l = attempt(left, args);
    auto r = attempt(right, args);
    if (l.value && r.value && *l.value == *r.value) return true;
    equal = false;
    if (witness) *witness = {"", to_display(lhs), to_display(rhs), args, render(l), render(r)};
    return false;
  });
  return equal;
}

namespace {

class LawRunner {
 public:
  LawRunner(Dsl const& d, LawOptions const& opts, TermEvaluator const& eval)
      : d_(d), opts_(opts), eval_(eval) {}

  void expect(AxiomResult& result, std::string const& law, OperadTerm const& lhs,
              OperadTerm const& rhs) {
    ++result.instances;
    Counterexample cx;
    if (!extensionally_equal(d_, lhs, rhs, opts_.bound, eval_, &cx)) {
      ++result.failures;
      if (!result.counterexample) {
        cx.law = law;
        result.counterexample = std::move(cx);
      }
    }
  }

  std::vector<Permutation> symmetries(std::size_t n) const {
    if (n <= opts_.max_full_symmetric_arity) return all_permutations(n);
    std::vector<Permutation> out{Permutation::identity(n)};
    for (std::size_t k = 0; k + 1 < n; ++k) out.push_back(Permutation::transposition(n, k, k + 1));
    return out;
  }

  Dsl const& dsl() const { return d_; }

 private:
  Dsl const& d_;
  LawOptions const& opts_;
  TermEvaluator const& eval_;
};

struct PooledTerm {
  OperadTerm term;
  Profile profile;
};

std::vector<PooledTerm> pool(Dsl const& d, std::size_t depth) {
  std::vector<PooledTerm> out;
  for (auto& t : generated_terms(d, depth)) {
    auto p = profile_of(d, t);
    out.push_back({std::move(t), std::move(p)});
  }
  return out;
}

AxiomResult check_units(LawRunner& run, std::vector<PooledTerm> const& terms) {
  AxiomResult result;
  result.axiom = Axiom::unit;
  auto const& d = run.dsl();
  for (auto const& [f, p] : terms) {
    run.expect(result, "left unit", OperadTerm::make_graft(unit_term(d, p.output), 0, f), f);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      run.expect(result, "right unit at slot " + std::to_string(i),
                 OperadTerm::make_graft(f, i, unit_term(d, p.inputs[i])), f);
    }
  }
  return result;
}

AxiomResult check_sequential(LawRunner& run, std::vector<PooledTerm> const& terms) {
  AxiomResult result;
  result.axiom = Axiom::sequential_associativity;
  for (auto const& [f, fp] : terms) {
    for (auto const& [g, gp] : terms) {
      for (std::size_t i = 0; i < fp.arity(); ++i) {
        if (fp.inputs[i] != gp.output) continue;
        for (auto const& [h, hp] : terms) {
          for (std::size_t j = 0; j < gp.arity(); ++j) {
            if (gp.inputs[j] != hp.output) continue;
            auto lhs = OperadTerm::make_graft(OperadTerm::make_graft(f, i, g), i + j, h);
            auto rhs = OperadTerm::make_graft(f, i, OperadTerm::make_graft(g, j, h));
            run.expect(result, "(f o" + std::to_string(i) + " g) o" + std::to_string(i + j) +
                                   " h = f o" + std::to_string(i) + " (g o" + std::to_string(j) +
                                   " h)",
                       lhs, rhs);
          }
        }
      }
    }
  }
  return result;
}

AxiomResult check_parallel(LawRunner& run, std::vector<PooledTerm> const& terms) {
  AxiomResult result;
  result.axiom = Axiom::parallel_associativity;
  for (auto const& [f, fp] : terms) {
    for (std::size_t i = 0; i < fp.arity(); ++i) {
      for (std::size_t k = i + 1; k < fp.arity(); ++k) {
        for (auto const& [g, gp] : terms) {
          if (fp.inputs[i] != gp.output) continue;
          for (auto const& [h, hp] : terms) {
            if (fp.inputs[k] != hp.output) continue;
            auto const m = gp.arity();
            auto lhs = OperadTerm::make_graft(OperadTerm::make_graft(f, i, g), k + m - 1, h);
            auto rhs = OperadTerm::make_graft(OperadTerm::make_graft(f, k, h), i, g);
            run.expect(result, "(f o" + std::to_string(i) + " g) o" + std::to_string(k + m - 1) +
                                   " h = (f o" + std::to_string(k) + " h) o" +
                                   std::to_string(i) + " g",
                       lhs, rhs);
          }
        }
      }
    }
  }
  return result;
}

AxiomResult check_equivariance(LawRunner& run, std::vector<PooledTerm> const& operands,
                               std::vector<PooledTerm> const& terms) {
  AxiomResult result;
  result.axiom = Axiom::equivariance;

  // Right action: identity acts trivially and actions compose.
  for (auto const& [t, p] : terms) {
    auto const n = p.arity();
    auto perms = run.symmetries(n);
    run.expect(result, "identity action", OperadTerm::make_permuted(t, Permutation::identity(n)), t);
    for (auto const& sigma : perms) {
      for (auto const& tau : perms) {
        run.expect(result, "(t.s).t = t.(s*t)",
                   OperadTerm::make_permuted(OperadTerm::make_permuted(t, sigma), tau),
                   OperadTerm::make_permuted(t, compose(sigma, tau)));
      }
    }
  }

  for (auto const& [f, fp] : operands) {
    auto const n = fp.arity();
    for (auto const& [g, gp] : operands) {
      auto const m = gp.arity();
      // Permuting the outer term.
      for (auto const& sigma : run.symmetries(n)) {
        for (std::size_t i = 0; i < n; ++i) {
          if (fp.inputs[sigma(i)] != gp.output) continue;
          auto lhs = OperadTerm::make_graft(OperadTerm::make_permuted(f, sigma), i, g);
          auto rhs = OperadTerm::make_permuted(OperadTerm::make_graft(f, sigma(i), g),
                                               block_permutation(sigma, i, m));
          run.expect(result, "(f.s) o" + std::to_string(i) + " g = (f o_s(i) g).s<m>", lhs, rhs);
        }
      }
      // Permuting the inner term.
      for (std::size_t i = 0; i < n; ++i) {
        if (fp.inputs[i] != gp.output) continue;
        for (auto const& tau : run.symmetries(m)) {
          auto lhs = OperadTerm::make_graft(f, i, OperadTerm::make_permuted(g, tau));
          auto rhs = OperadTerm::make_permuted(OperadTerm::make_graft(f, i, g),
                                               block_inset(tau, i, n));
          run.expect(result, "f o" + std::to_string(i) + " (g.t) = (f o" + std::to_string(i) +
                                 " g).t<i>",
                     lhs, rhs);
        }
      }
    }
  }
  return result;
}

}  // namespace

LawReport check_laws(Dsl const& d, LawOptions const& options, TermEvaluator const& eval) {
  if (options.bound == 0) {
    throw Error(ErrorKind::invalid_bound, "law checking bound must be at least 1");
  }
  require_valid(d);

  LawRunner run(d, options, eval);
  auto const depth = options.depth;
  auto const full = pool(d, depth);
  auto const one_less = pool(d, depth >= 1 ? depth - 1 : 0);
  std::vector<PooledTerm> const two_less = depth >= 2 ? pool(d, depth - 2) : std::vector<PooledTerm>{};

  LawReport report{d.name, options.bound, depth, {}};
  report.axioms.push_back(check_units(run, depth >= 1 ? one_less : std::vector<PooledTerm>{}));
  report.axioms.push_back(check_sequential(run, two_less));
  report.axioms.push_back(check_parallel(run, two_less));
  report.axioms.push_back(
      check_equivariance(run, depth >= 1 ? one_less : std::vector<PooledTerm>{}, full));
  return report;
}

}  // namespace opglue
