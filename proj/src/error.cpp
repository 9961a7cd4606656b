#include "jumploci/error.hpp"

namespace jumploci {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_exponent: return "invalid-exponent";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::malformed_braid: return "malformed-braid";
    case Errc::invalid_component: return "invalid-component";
    case Errc::component_underflow: return "component-underflow";
    case Errc::insufficient_truncation: return "insufficient-truncation";
    case Errc::non_reduced_input: return "non-reduced-input";
    case Errc::arity: return "arity";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::hypothesis_violation: return "hypothesis-violation";
    case Errc::contradiction: return "contradiction";
    case Errc::coverage_mismatch: return "coverage-mismatch";
    case Errc::parse: return "parse";
    case Errc::unknown_corpus: return "unknown-corpus";
  }
  return "unknown";
}

}  // namespace jumploci
