#ifndef OPGLUE_MORPHISM_HPP_
#define OPGLUE_MORPHISM_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "opglue/dsl.hpp"
#include "opglue/operad.hpp"

namespace opglue {

// A map of DSLs: a sigil map together with the induced symbol map.
struct DslMorphism {
  Dsl source;
  Dsl target;
  std::map<std::string, std::string> type_map;
  std::map<std::string, std::string> symbol_map;

  // Throw unknown_sigil / unknown_symbol when the key is not mapped.
  std::string const& map_sigil(std::string_view sigil) const;
  std::string const& map_symbol(std::string_view symbol) const;

  bool operator==(DslMorphism const&) const = default;
};

DslMorphism identity_morphism(Dsl const& d);

// second after first.
DslMorphism compose(DslMorphism const& second, DslMorphism const& first);

// Totality of both maps and existence of every image. No semantic checks.
ValidationReport check_morphism_structure(DslMorphism const& m);

// Structure, denotation preservation, signature commutation and
// extensional action preservation on every tuple enumerated at bound.
ValidationReport check_morphism(DslMorphism const& m, std::size_t bound);

// Bijective on sigils and symbols, and both directions pass check_morphism.
bool is_isomorphism(DslMorphism const& m, std::size_t bound);

// Extends a morphism from generators to grafted terms.
OperadTerm map_term(DslMorphism const& m, OperadTerm const& t);

}  // namespace opglue

#endif
