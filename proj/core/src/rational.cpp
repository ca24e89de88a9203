#include <cyclo/errors.hpp>
#include <cyclo/rational.hpp>

#include <cctype>
#include <cmath>
#include <string>

namespace cyclo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(Errc::parse_error, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    q = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      bad_rational(text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = Rational(digits, scale);
  } else {
    if (!all_digits(s)) bad_rational(text);
    q = Rational(Integer(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw Error(Errc::invalid_argument, "non-finite double");
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

double sqrt_to_double(const Rational& q) {
  if (sgn(q) < 0) throw Error(Errc::invalid_argument, "square root of a negative rational");
  if (sgn(q) == 0) return 0.0;

  // Scale by 4^e so that floor(q * 4^e) has at least 114 bits; its integer
  // square root then has at least 57, enough for a 53-bit mantissa plus a
  // guard bit, with everything below folded into a sticky flag.
  const auto num_bits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  const auto den_bits = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  const long e = (116 - (num_bits - den_bits)) / 2 + 1;

  Integer num = q.get_num(), den = q.get_den();
  if (e >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * e));
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-2 * e));

  Integer scaled, rem;
  mpz_fdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer root, root_rem;
  mpz_sqrtrem(root.get_mpz_t(), root_rem.get_mpz_t(), scaled.get_mpz_t());
  const bool sticky = rem != 0 || root_rem != 0;

  const auto bits = static_cast<long>(mpz_sizeinbase(root.get_mpz_t(), 2));
  const long shift = bits - 53;
  Integer mantissa;
  mpz_fdiv_q_2exp(mantissa.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  Integer dropped;
  mpz_fdiv_r_2exp(dropped.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  Integer half;
  mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(shift - 1));

  const int vs_half = cmp(dropped, half);
  if (vs_half > 0 || (vs_half == 0 && (sticky || mpz_odd_p(mantissa.get_mpz_t())))) ++mantissa;

  return std::ldexp(mantissa.get_d(), static_cast<int>(shift - e));
}

}  // namespace cyclo
