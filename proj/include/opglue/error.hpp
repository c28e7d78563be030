#ifndef OPGLUE_ERROR_HPP_
#define OPGLUE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opglue {

enum class ErrorKind {
  parse_error,
  io_error,
  invalid_bound,
  unknown_sigil,
  unknown_symbol,
  unknown_builtin,
  arity_mismatch,
  type_mismatch,
  ill_colored_term,
  index_out_of_range,
  color_mismatch,
  size_mismatch,
  invalid_dsl,
  invalid_morphism,
  invalid_diagram,
  precondition_violation,
  safety_violation,
  inconsistent_quotient,
  action_disagreement,
  search_space_exceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Report-level failures (as opposed to malformed input).
bool is_report_failure(ErrorKind kind) noexcept;

struct Diagnostic {
  std::string kind;
  std::string subject;
  std::string message;

  bool operator==(Diagnostic const&) const = default;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return diagnostics.empty(); }
  void add(std::string kind, std::string subject, std::string message) {
    diagnostics.push_back(
        {std::move(kind), std::move(subject), std::move(message)});
  }
  void append(ValidationReport const& other) {
    diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                       other.diagnostics.end());
  }

  bool operator==(ValidationReport const&) const = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message, ValidationReport report = {})
      : std::runtime_error(message), kind_(kind), report_(std::move(report)) {}

  ErrorKind kind() const noexcept { return kind_; }
  ValidationReport const& report() const noexcept { return report_; }

 private:
  ErrorKind kind_;
  ValidationReport report_;
};

}  // namespace opglue

#endif
