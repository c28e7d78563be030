#include "opglue/error.hpp"

namespace opglue {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::invalid_bound: return "invalid-bound";
    case ErrorKind::unknown_sigil: return "unknown-sigil";
    case ErrorKind::unknown_symbol: return "unknown-symbol";
    case ErrorKind::unknown_builtin: return "unknown-builtin";
    case ErrorKind::arity_mismatch: return "arity-mismatch";
    case ErrorKind::type_mismatch: return "type-mismatch";
    case ErrorKind::ill_colored_term: return "ill-colored-term";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::color_mismatch: return "color-mismatch";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::invalid_dsl: return "invalid-dsl";
    case ErrorKind::invalid_morphism: return "invalid-morphism";
    case ErrorKind::invalid_diagram: return "invalid-diagram";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::safety_violation: return "safety-violation";
    case ErrorKind::inconsistent_quotient: return "inconsistent-quotient";
    case ErrorKind::action_disagreement: return "action-disagreement";
    case ErrorKind::search_space_exceeded: return "search-space-exceeded";
  }
  return "unknown";
}

bool is_report_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::safety_violation:
    case ErrorKind::inconsistent_quotient:
    case ErrorKind::action_disagreement:
      return true;
    default:
      return false;
  }
}

}  // namespace opglue
