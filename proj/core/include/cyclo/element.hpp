#pragma once

#include <cyclo/rational.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace cyclo {

/// True when p is an odd prime (trial division).
bool is_odd_prime(std::int64_t p) noexcept;

/// Throws Error(non_prime_modulus) unless p is an odd prime.
void require_odd_prime(std::int64_t p);

/// An element of the p-th cyclotomic field Q(w), stored by its coordinates
/// in the basis {w, w^2, ..., w^(p-1)}. The constant 1 is never stored
/// directly: it is folded into -(w + ... + w^(p-1)), so equal field elements
/// always have identical coordinate vectors.
class CycloElement {
 public:
  /// Sum of coeffs[j-1] * w^j for j = 1..p-1.
  static CycloElement make(int p, std::vector<Rational> coeffs);
  static CycloElement zero(int p);
  /// The field element q * 1, i.e. coordinates (-q, ..., -q).
  static CycloElement from_rational(int p, const Rational& q);
  /// w^j for any integer j (reduced mod p; j = 0 gives 1).
  static CycloElement root_power(int p, std::int64_t j);

  int p() const noexcept { return p_; }
  int dimension() const noexcept { return p_ - 1; }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of w^j, 1 <= j <= p-1.
  const Rational& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j - 1)); }

  bool is_zero() const;
  /// True when every coordinate is equal, i.e. the element lies in Q.
  bool is_rational() const;

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const Rational& scalar);

  friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs) { return lhs += rhs; }
  friend CycloElement operator-(CycloElement lhs, const CycloElement& rhs) { return lhs -= rhs; }
  friend CycloElement operator*(const Rational& scalar, CycloElement a) { return a *= scalar; }
  friend CycloElement operator*(CycloElement a, const Rational& scalar) { return a *= scalar; }
  CycloElement operator-() const;

  /// Full ring product (naive convolution mod p, then constant folding).
  friend CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs);

 private:
  CycloElement(int p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}

  int p_;
  std::vector<Rational> coeffs_;
};

/// Throws Error(modulus_mismatch) if the operands live in different fields.
void require_same_field(const CycloElement& a, const CycloElement& b);

CycloElement add(const CycloElement& a, const CycloElement& b);
CycloElement neg(const CycloElement& a);
CycloElement scalar_mul(const Rational& q, const CycloElement& a);
CycloElement mul(const CycloElement& a, const CycloElement& b);

/// a * w^j. Each basis exponent shifts by j mod p; whatever lands on w^0 is
/// folded back through 1 = -(w + ... + w^(p-1)).
CycloElement mul_by_root_power(const CycloElement& a, std::int64_t j);

}  // namespace cyclo
