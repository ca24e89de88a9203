#include <cyclo/errors.hpp>
#include <cyclo/rational.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using cyclo::Errc;
using cyclo::Error;
using cyclo::Integer;
using cyclo::Rational;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cyclo::Error thrown";
  return Errc::invalid_argument;
}

}  // namespace

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(cyclo::parse_rational("1/20"), Rational(1, 20));
  EXPECT_EQ(cyclo::parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(cyclo::parse_rational(" 42 "), Rational(42));
  EXPECT_EQ(cyclo::parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(cyclo::parse_rational("-.5"), Rational(-1, 2));
  EXPECT_EQ(cyclo::parse_rational("+3."), Rational(3));
  EXPECT_EQ(cyclo::parse_rational("123456789012345678901234567890/3"),
            Rational(Integer("41152263004115226300411522630")));
}

TEST(ParseRational, RejectsGarbage) {
  for (const char* bad : {"", "-", "1/0", "a", "1/2/3", "1e5", "1/-2", ".", "--1"})
    EXPECT_EQ(code_of([&] { cyclo::parse_rational(bad); }), Errc::parse_error) << bad;
}

TEST(RationalToString, LowestTermsWithIntegerShortcut) {
  EXPECT_EQ(cyclo::to_string(cyclo::make_rational(10, 4)), "5/2");
  EXPECT_EQ(cyclo::to_string(cyclo::make_rational(-18, 1)), "-18");
  EXPECT_EQ(cyclo::to_string(cyclo::make_rational(0, 7)), "0");
}

TEST(RationalFromDouble, ExactBinaryExpansion) {
  EXPECT_EQ(cyclo::rational_from_double(0.5), Rational(1, 2));
  // 0.1 is not 1/10 in binary
  const Rational tenth = cyclo::rational_from_double(0.1);
  EXPECT_NE(tenth, Rational(1, 10));
  EXPECT_EQ(tenth.get_den(), Integer(1) << 55);
  EXPECT_EQ(code_of([] { cyclo::rational_from_double(NAN); }), Errc::invalid_argument);
}

TEST(SqrtToDouble, PerfectSquaresAreExact) {
  EXPECT_EQ(cyclo::sqrt_to_double(Rational(0)), 0.0);
  EXPECT_EQ(cyclo::sqrt_to_double(Rational(18 * 18)), 18.0);
  EXPECT_EQ(cyclo::sqrt_to_double(Rational(9, 4)), 1.5);
  EXPECT_EQ(cyclo::sqrt_to_double(Rational(1, 1 << 20)), 1.0 / 1024);
}

TEST(SqrtToDouble, MatchesLibmOnDoubles) {
  // libm sqrt is correctly rounded, so for inputs that are exact doubles
  // both routes must agree bit for bit.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(1.0, 2.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(mant(rng), expo(rng));
    EXPECT_EQ(cyclo::sqrt_to_double(cyclo::rational_from_double(x)), std::sqrt(x)) << x;
  }
}

TEST(SqrtToDouble, NearestForGeneralRationals) {
  // r is nearest iff q lies between the squared midpoints around r.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 1'000'000'000L), den(1, 1'000'000L);
  for (int i = 0; i < 2000; ++i) {
    Rational q(num(rng), static_cast<unsigned long>(den(rng)));
    q.canonicalize();
    const double r = cyclo::sqrt_to_double(q);
    const Rational lo_mid = (cyclo::rational_from_double(std::nextafter(r, 0.0)) + cyclo::rational_from_double(r)) / 2;
    const Rational hi_mid = (cyclo::rational_from_double(std::nextafter(r, INFINITY)) + cyclo::rational_from_double(r)) / 2;
    EXPECT_LE(Rational(lo_mid * lo_mid), q);
    EXPECT_GE(Rational(hi_mid * hi_mid), q);
  }
}

TEST(SqrtToDouble, NegativeIsRejected) {
  EXPECT_EQ(code_of([] { cyclo::sqrt_to_double(Rational(-1)); }), Errc::invalid_argument);
}
