#include <cyclo/element.hpp>
#include <cyclo/errors.hpp>

#include <algorithm>
#include <string>

namespace cyclo {

namespace {

std::size_t reduce_exponent(std::int64_t j, int p) {
  const std::int64_t r = j % p;
  return static_cast<std::size_t>(r < 0 ? r + p : r);
}

// buf[e] is the coefficient of w^e for e = 0..p-1; w^0 is folded away.
std::vector<Rational> fold_constant(std::vector<Rational> buf) {
  const Rational constant = buf.front();
  std::vector<Rational> coeffs(buf.size() - 1);
  for (std::size_t j = 1; j < buf.size(); ++j) coeffs[j - 1] = buf[j] - constant;
  return coeffs;
}

}  // namespace

bool is_odd_prime(std::int64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p))
    throw Error(Errc::non_prime_modulus, std::to_string(p) + " is not an odd prime");
}

void require_same_field(const CycloElement& a, const CycloElement& b) {
  if (a.p() != b.p())
    throw Error(Errc::modulus_mismatch,
                "elements of Q(w_" + std::to_string(a.p()) + ") and Q(w_" + std::to_string(b.p()) + ")");
}

CycloElement CycloElement::make(int p, std::vector<Rational> coeffs) {
  require_odd_prime(p);
  if (coeffs.size() != static_cast<std::size_t>(p - 1))
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(p - 1) + " coefficients, got " +
                                              std::to_string(coeffs.size()));
  for (auto& c : coeffs) c.canonicalize();
  return CycloElement(p, std::move(coeffs));
}

CycloElement CycloElement::zero(int p) {
  require_odd_prime(p);
  return CycloElement(p, std::vector<Rational>(static_cast<std::size_t>(p - 1)));
}

CycloElement CycloElement::from_rational(int p, const Rational& q) {
  require_odd_prime(p);
  return CycloElement(p, std::vector<Rational>(static_cast<std::size_t>(p - 1), Rational(-q)));
}

CycloElement CycloElement::root_power(int p, std::int64_t j) {
  require_odd_prime(p);
  std::vector<Rational> buf(static_cast<std::size_t>(p));
  buf[reduce_exponent(j, p)] = 1;
  return CycloElement(p, fold_constant(std::move(buf)));
}

bool CycloElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloElement::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Rational& c) { return c == coeffs_.front(); });
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  require_same_field(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  require_same_field(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs) {
  require_same_field(lhs, rhs);
  const int p = lhs.p_;
  std::vector<Rational> buf(static_cast<std::size_t>(p));
  Rational term;
  for (int i = 1; i < p; ++i) {
    const Rational& a = lhs.coeffs_[static_cast<std::size_t>(i - 1)];
    if (sgn(a) == 0) continue;
    for (int j = 1; j < p; ++j) {
      const Rational& b = rhs.coeffs_[static_cast<std::size_t>(j - 1)];
      if (sgn(b) == 0) continue;
      term = a * b;
      buf[static_cast<std::size_t>((i + j) % p)] += term;
    }
  }
  return CycloElement(p, fold_constant(std::move(buf)));
}

CycloElement add(const CycloElement& a, const CycloElement& b) { return a + b; }
CycloElement neg(const CycloElement& a) { return -a; }
CycloElement scalar_mul(const Rational& q, const CycloElement& a) { return q * a; }
CycloElement mul(const CycloElement& a, const CycloElement& b) { return a * b; }

CycloElement mul_by_root_power(const CycloElement& a, std::int64_t j) {
  const int p = a.p();
  const std::size_t shift = reduce_exponent(j, p);
  if (shift == 0) return a;
  std::vector<Rational> buf(static_cast<std::size_t>(p));
  for (int i = 1; i < p; ++i) buf[(static_cast<std::size_t>(i) + shift) % static_cast<std::size_t>(p)] = a.coeff(i);
  return CycloElement::make(p, fold_constant(std::move(buf)));
}

}  // namespace cyclo
