#include <gtest/gtest.h>

#include "oscnum/errors.hpp"
#include "oscnum/values.hpp"

namespace oscnum {
namespace {

TEST(PowerParamTest, ExactRangeIsMinusOneToFour) {
  EXPECT_NO_THROW(PowerParam::exact(-1));
  EXPECT_NO_THROW(PowerParam::exact(4));
  EXPECT_THROW(PowerParam::exact(-2), DomainError);
  EXPECT_THROW(PowerParam::exact(5), DomainError);
}

TEST(PowerParamTest, FloatRejectsNonFinite) {
  EXPECT_THROW(PowerParam::floating(Complex{std::nan(""), 0.0}), DomainError);
  EXPECT_THROW(PowerParam::floating(Complex{1.0, INFINITY}), DomainError);
}

TEST(PowerParamTest, ExactValueOnlyInExactMode) {
  EXPECT_EQ(PowerParam::exact(2).exact_value(), 2);
  EXPECT_THROW((void)PowerParam::floating(2.0).exact_value(), DomainError);
}

TEST(PowerParamTest, Rendering) {
  EXPECT_EQ(PowerParam::exact(2).to_string(), "2");
  EXPECT_EQ(PowerParam::floating(1.5).to_string(), "1.5");
  EXPECT_EQ(PowerParam::floating(Complex{0.5, -14.25}).to_string(), "0.5-14.25i");
}

TEST(SumValueTest, ExactArithmeticNeverRounds) {
  SumValue v(Rational(1, 3));
  v += SumValue(Rational(1, 6));
  EXPECT_TRUE(v.is_exact());
  EXPECT_EQ(v.rational(), Rational(1, 2));
  EXPECT_EQ(v.to_string(), "1/2");
  v *= SumValue(Rational(4));
  EXPECT_EQ(v.to_string(), "2");
}

TEST(SumValueTest, MixedArithmeticPromotesToFloat) {
  const SumValue v = SumValue(Rational(1, 4)) + SumValue(0.5);
  EXPECT_FALSE(v.is_exact());
  EXPECT_DOUBLE_EQ(v.real(), 0.75);
}

TEST(SumValueTest, ExactDivisionByZeroThrows) {
  EXPECT_THROW(SumValue(Rational(1)) / SumValue(Rational(0)), DomainError);
}

TEST(FormatTest, FifteenSignificantDigits) {
  EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1e8), "100000000");
  EXPECT_EQ(format_complex(Complex{1.0, 2.0}), "1+2i");
}

TEST(InversePowerTest, ExactAndFloatAgree) {
  for (int s = -1; s <= 4; ++s) {
    for (std::uint64_t k = 1; k <= 50; ++k) {
      const double exact = exact_inverse_power(k, s).get_d();
      const double flt = float_inverse_power(k, Complex{static_cast<double>(s), 0.0}).real();
      EXPECT_NEAR(flt, exact, 1e-15 * std::max(1.0, std::fabs(exact)));
    }
  }
}

TEST(InversePowerTest, ComplexExponentUsesRealLogarithm) {
  const Complex s{0.5, 3.0};
  const Complex v = float_inverse_power(7, s);
  EXPECT_NEAR(std::abs(v), std::pow(7.0, -0.5), 1e-15);
  EXPECT_NEAR(std::arg(v), std::remainder(-3.0 * std::log(7.0), 2 * M_PI), 1e-13);
}

}  // namespace
}  // namespace oscnum
