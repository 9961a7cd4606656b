#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jumploci {

enum class Errc {
  invalid_exponent,
  division_by_zero,
  malformed_braid,
  invalid_component,
  component_underflow,
  insufficient_truncation,
  non_reduced_input,
  arity,
  budget_exceeded,
  hypothesis_violation,
  contradiction,
  coverage_mismatch,
  parse,
  unknown_corpus,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the verifier) can branch on the kind without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace jumploci
