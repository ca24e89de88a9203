#include <cyclo/errors.hpp>

namespace cyclo {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::modulus_mismatch: return "ModulusMismatch";
    case Errc::out_of_box: return "OutOfBox";
    case Errc::bad_automorphism_index: return "BadAutomorphismIndex";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::unsupported_exponent: return "UnsupportedExponent";
    case Errc::non_positive_epsilon: return "NonPositiveEpsilon";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::odd_moment_unsupported: return "OddMomentUnsupported";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cyclo
