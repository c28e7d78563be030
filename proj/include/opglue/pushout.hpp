#ifndef OPGLUE_PUSHOUT_HPP_
#define OPGLUE_PUSHOUT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "opglue/morphism.hpp"
#include "opglue/quotient.hpp"

namespace opglue {

// left <- apex -> right.
struct Span {
  Dsl apex;
  DslMorphism left;
  DslMorphism right;
};

Span swapped(Span const& s);

// Evidence that a left sigil and a right sigil both denote `base`.
struct GlueWitness {
  std::string left_sigil;
  std::string right_sigil;
  BaseType base;

  bool operator==(GlueWitness const&) const = default;
};

struct PushoutResult {
  Dsl glued;
  DslMorphism inj_left;
  DslMorphism inj_right;
  // Members are labelled "left" or "right".
  std::vector<EquivalenceClass> type_classes;
  std::vector<EquivalenceClass> symbol_classes;
  std::vector<GlueWitness> witnesses_used;
  ValidationReport safety;
};

inline constexpr char const* left_label = "left";
inline constexpr char const* right_label = "right";

ValidationReport check_safety(Span const& s, std::vector<GlueWitness> const& witnesses,
                              std::size_t bound);

// Throws invalid_morphism for malformed spans, then safety_violation,
// inconsistent_quotient or action_disagreement (with the safety report).
PushoutResult pushout(Span const& s, std::vector<GlueWitness> const& witnesses,
                      std::size_t bound);

struct UniversalityReport : ValidationReport {
  std::size_t cocones = 0;
  std::size_t symbol_cocones = 0;
  std::size_t candidates = 0;
};

inline constexpr std::size_t max_universal_targets = 3;
inline constexpr std::size_t default_search_ceiling = 50'000'000;

// Brute force over every cocone into a universe of at most max_target_sigils
// sigils (bases drawn from the glued denotations): each must factor through
// the pushout by exactly one mediating map. Throws precondition_violation
// when max_target_sigils > 3 and search_space_exceeded past the ceiling.
UniversalityReport verify_universal_property(PushoutResult const& p, Span const& s,
                                             std::size_t max_target_sigils,
                                             std::size_t ceiling = default_search_ceiling);

// Candidate target universes for the universality search: every assignment
// of the given bases to 1..max sigils named e0, e1, ...
std::vector<TypeUniverse> candidate_universes(std::vector<BaseType> const& bases,
                                              std::size_t max_sigils);

}  // namespace opglue

#endif
