#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class Errc {
  non_prime_modulus,
  dimension_mismatch,
  modulus_mismatch,
  out_of_box,
  bad_automorphism_index,
  search_exhausted,
  unsupported_exponent,
  non_positive_epsilon,
  budget_exceeded,
  odd_moment_unsupported,
  parse_error,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cyclo
