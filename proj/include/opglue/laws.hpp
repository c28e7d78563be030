#ifndef OPGLUE_LAWS_HPP_
#define OPGLUE_LAWS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opglue/operad.hpp"

namespace opglue {

enum class Axiom { unit, sequential_associativity, parallel_associativity, equivariance };

std::string_view to_string(Axiom a) noexcept;

struct Counterexample {
  std::string law;
  std::string lhs;
  std::string rhs;
  std::vector<Value> args;
  // Rendered values, or the error raised while evaluating that side.
  std::string lhs_result;
  std::string rhs_result;
};

struct AxiomResult {
  Axiom axiom = Axiom::unit;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct LawReport {
  std::string dsl;
  std::size_t bound = 0;
  std::size_t depth = 0;
  std::vector<AxiomResult> axioms;

  bool ok() const noexcept;
  AxiomResult const& result(Axiom a) const;
};

using TermEvaluator =
    std::function<Value(Dsl const&, OperadTerm const&, std::span<Value const>)>;

struct LawOptions {
  std::size_t bound = 3;
  // Maximum graft depth of every term appearing in a law instance.
  std::size_t depth = 2;
  // Above this arity only transpositions of neighbours are used.
  std::size_t max_full_symmetric_arity = 4;
};

// Every well-colored generator-built term with graft depth <= depth.
std::vector<OperadTerm> generated_terms(Dsl const& d, std::size_t depth);

// Agreement of two terms on every enumerated argument tuple. On failure the
// first disagreement is stored in *witness when given. An empty evaluator
// means eval_term.
bool extensionally_equal(Dsl const& d, OperadTerm const& lhs, OperadTerm const& rhs,
                         std::size_t bound, TermEvaluator const& eval,
                         Counterexample* witness = nullptr);

// Exhaustive check of the unit, sequential and parallel associativity, and
// equivariance axioms. Throws invalid_dsl or invalid_bound.
LawReport check_laws(Dsl const& d, LawOptions const& options,
                     TermEvaluator const& eval = {});

}  // namespace opglue

#endif
