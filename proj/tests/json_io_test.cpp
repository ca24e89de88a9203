#include <cyclo/errors.hpp>
#include <cyclo/json_io.hpp>

#include <gtest/gtest.h>

#include "support/generators.hpp"

using cyclo::CycloElement;
using cyclo::Errc;
using cyclo::Error;
using cyclo::Rational;

namespace {

Errc parse_code(std::string_view text, std::optional<int> p = std::nullopt) {
  try {
    cyclo::element_from_json(text, p);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::invalid_argument;
}

}  // namespace

TEST(JsonIo, WritesStringPairs) {
  const auto a = CycloElement::make(5, {Rational(1), Rational(-3, 2), Rational(0), Rational(0)});
  EXPECT_EQ(cyclo::element_to_json(a), R"({"coeffs":[["1","1"],["-3","2"],["0","1"],["0","1"]],"p":5})");
}

TEST(JsonIo, AcceptsAllCoefficientEncodings) {
  const auto expected = CycloElement::make(3, {Rational(-1, 2), Rational(4)});
  EXPECT_EQ(cyclo::element_from_json(R"({"p":3,"coeffs":[["-1","2"],["4","1"]]})"), expected);
  EXPECT_EQ(cyclo::element_from_json(R"([["-2","4"],["8","2"]])", 3), expected);
  EXPECT_EQ(cyclo::element_from_json(R"(["-1/2", 4])", 3), expected);
  EXPECT_EQ(cyclo::element_from_json(R"({"p":3,"coeffs":["-0.5","4"]})", 3), expected);
}

TEST(JsonIo, KeepsArbitraryPrecision) {
  const std::string big = "123456789012345678901234567890123456789";
  const auto a = cyclo::element_from_json(R"({"p":3,"coeffs":[[")" + big + R"(","7"],["1","1"]]})");
  EXPECT_EQ(a.coeff(1), Rational(cyclo::Integer(big), cyclo::Integer(7)));
  EXPECT_NE(cyclo::element_to_json(a).find(big), std::string::npos);
}

TEST(JsonIo, Errors) {
  EXPECT_EQ(parse_code("{"), Errc::parse_error);
  EXPECT_EQ(parse_code(R"([["1","1"],["0","1"]])"), Errc::parse_error);
  EXPECT_EQ(parse_code(R"({"coeffs":[]})"), Errc::parse_error);
  EXPECT_EQ(parse_code(R"({"p":3,"coeffs":[["1","0"],["0","1"]]})"), Errc::parse_error);
  EXPECT_EQ(parse_code(R"({"p":3,"coeffs":[["x","1"],["0","1"]]})"), Errc::parse_error);
  EXPECT_EQ(parse_code(R"({"p":3,"coeffs":[1.5, 2]})"), Errc::parse_error);
  EXPECT_EQ(parse_code(R"({"p":3,"coeffs":[1, 2, 3]})"), Errc::dimension_mismatch);
  EXPECT_EQ(parse_code(R"({"p":9,"coeffs":[1,2,3,4,5,6,7,8]})"), Errc::non_prime_modulus);
  EXPECT_EQ(parse_code(R"({"p":3,"coeffs":[1,2]})", 5), Errc::modulus_mismatch);
}

TEST(JsonIo, RoundTrip) {
  gen::Source src(17);
  for (int i = 0; i < 2000; ++i) {
    const int p = src.pick(std::vector<int>{3, 5, 7, 11, 13});
    const auto a = src.element(p);
    EXPECT_EQ(cyclo::element_from_json(cyclo::element_to_json(a)), a);
  }
}

TEST(JsonIo, TraceVector) {
  const auto v = cyclo::trace_vector(CycloElement::root_power(3, 1));
  EXPECT_EQ(cyclo::trace_vector_to_json(v), R"(["-1","2"])");
}
