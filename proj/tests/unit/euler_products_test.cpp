#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "oscnum/errors.hpp"
#include "oscnum/euler_products.hpp"
#include "oscnum/gamma.hpp"
#include "oscnum/summation.hpp"

namespace oscnum {
namespace {

constexpr double kPi = std::numbers::pi;

class EulerProductsTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { table_ = new SieveTable(SieveTable::build(1000000)); }
  static void TearDownTestSuite() {
    delete table_;
    table_ = nullptr;
  }
  static const SieveTable& table() { return *table_; }

 private:
  static inline SieveTable* table_ = nullptr;
};

TEST_F(EulerProductsTest, PartialProductExamples) {
  EXPECT_EQ(euler_partial_product(PowerParam::exact(1), 3, table()).rational(), Rational(1, 3));
  EXPECT_EQ(euler_partial_product(PowerParam::exact(1), 2, table()).rational(), Rational(1, 2));
  EXPECT_EQ(euler_partial_product(PowerParam::exact(1), 4, table()).rational(), Rational(1, 3));
  const double six_over_pi2 = 6.0 / (kPi * kPi);
  EXPECT_NEAR(euler_partial_product(PowerParam::floating(2.0), 100000, table()).real(),
              six_over_pi2, 2e-5);
}

TEST_F(EulerProductsTest, ZetaKnownValues) {
  EXPECT_NEAR(zeta_eval(2.0).real(), kPi * kPi / 6.0, 1e-14);
  EXPECT_NEAR(zeta_eval(4.0).real(), std::pow(kPi, 4) / 90.0, 1e-14);
  EXPECT_NEAR(zeta_eval(3.0).real(), 1.2020569031595942854, 1e-14);
  EXPECT_THROW(zeta_eval(1.0), DomainError);
  EXPECT_THROW(zeta_eval(Complex{0.5, 14.1}), DomainError);
}

TEST_F(EulerProductsTest, ZetaOneAndATenthAgainstLongDirectSum) {
  constexpr std::uint64_t n = 10000000;
  CompensatedSum sum;
  for (std::uint64_t k = n; k >= 1; --k) sum += std::pow(static_cast<double>(k), -1.1);
  // Tail by Euler-Maclaurin to two terms; the next term is below 1e-17.
  const double nd = static_cast<double>(n);
  const double tail = std::pow(nd, -0.1) / 0.1 - std::pow(nd, -1.1) / 2.0 +
                      1.1 * std::pow(nd, -2.1) / 12.0;
  const double reference = sum.value() + tail;
  const Complex z = zeta_eval(1.1);
  EXPECT_GT(z.real(), 1.0);
  EXPECT_NEAR(z.real(), reference, 1e-8);
  EXPECT_EQ(z.imag(), 0.0);
}

TEST_F(EulerProductsTest, ZetaComplexArgumentAgainstDirectSum) {
  const Complex s{2.0, 3.0};
  CompensatedComplexSum sum;
  constexpr std::uint64_t n = 200000;
  for (std::uint64_t k = n; k >= 1; --k) {
    sum += std::exp(-s * std::log(static_cast<double>(k)));
  }
  const double nd = static_cast<double>(n);
  const Complex tail = std::exp((1.0 - s) * std::log(nd)) / (s - 1.0) -
                       std::exp(-s * std::log(nd)) / 2.0;
  EXPECT_LT(std::abs(zeta_eval(s) - (sum.value() + tail)), 1e-11);
}

TEST_F(EulerProductsTest, ThetaTruncatedExamples) {
  const double six_over_pi2 = 6.0 / (kPi * kPi);
  EXPECT_NEAR(theta_truncated(PowerParam::floating(2.0), 1e6, table()).real(), six_over_pi2,
              2e-6);
  EXPECT_EQ(theta_truncated(PowerParam::exact(2), 1, table()).rational(), Rational(1));
  EXPECT_LT(std::fabs(theta_truncated(PowerParam::floating(1.0), 1e6, table()).real()), 0.01);
}

TEST_F(EulerProductsTest, ReciprocalExamples) {
  const auto two = verify_reciprocal(2.0, 1e6, table());
  EXPECT_LT(two.residual, 4e-6);
  EXPECT_TRUE(two.passed());
  const auto three = verify_reciprocal(3.0, 1e3, table());
  EXPECT_LT(three.residual, 2e-6);
  EXPECT_TRUE(three.passed());
  const auto single = verify_reciprocal(2.0, 1, table());
  EXPECT_NEAR(single.residual, kPi * kPi / 6.0 - 1.0, 1e-12);
  EXPECT_TRUE(single.passed());
  EXPECT_THROW(verify_reciprocal(1.2, 100, table()), DomainError);
}

TEST_F(EulerProductsTest, ReciprocalResidualEnvelopedByTailBound) {
  for (double x : {1e2, 1e3, 1e4, 1e5, 1e6}) {
    const auto r = verify_reciprocal(2.0, x, table());
    EXPECT_LE(r.residual, zeta_eval(2.0).real() * oracle::tail_bound(static_cast<std::uint64_t>(x), 2.0))
        << x;
  }
}

TEST_F(EulerProductsTest, GammaAgainstStdTgamma) {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 20.0, -0.5, -2.7}) {
    EXPECT_NEAR(gamma(Complex{x, 0.0}).real(), std::tgamma(x), 1e-13 * std::fabs(std::tgamma(x)))
        << x;
  }
  // Gamma(1/2 + i t) modulus: sqrt(pi / cosh(pi t)).
  for (double t : {0.5, 3.0, 10.0}) {
    EXPECT_NEAR(std::abs(gamma(Complex{0.5, t})), std::sqrt(kPi / std::cosh(kPi * t)),
                1e-13 * std::sqrt(kPi / std::cosh(kPi * t)))
        << t;
  }
  EXPECT_THROW(gamma(Complex{-3.0, 0.0}), DomainError);
  EXPECT_EQ(reciprocal_gamma(Complex{-3.0, 0.0}), Complex(0.0, 0.0));
}

TEST_F(EulerProductsTest, FunctionalFactorSpotValues) {
  const Complex chi2 = functional_factor(2.0);
  EXPECT_NEAR(chi2.real(), -2.0 * kPi * kPi, 1e-12);
  EXPECT_NEAR(chi2.imag(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(functional_factor(0.5)), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(functional_factor(Complex{0.5, 21.0})), 1.0, 1e-10);
  EXPECT_THROW(functional_factor(1.0), DomainError);
  EXPECT_THROW(functional_factor(3.0), DomainError);
}

TEST_F(EulerProductsTest, FunctionalFactorIsReciprocalOfThetaFactor) {
  for (Complex s : {Complex{0.3, 0.0}, Complex{0.5, 14.0}, Complex{2.0, 0.0}, Complex{-1.5, 2.0},
                    Complex{4.0, 0.0}}) {
    EXPECT_NEAR(std::abs(functional_factor(s) * theta_functional_factor(s) - 1.0), 0.0, 1e-12)
        << s;
  }
}

TEST_F(EulerProductsTest, FunctionalEquationConsistency) {
  // zeta(s) = chi(s) zeta(1 - s) with zeta(-1) = -1/12 and zeta(-3) = 1/120.
  EXPECT_NEAR((functional_factor(2.0) * (-1.0 / 12.0)).real(), kPi * kPi / 6.0, 1e-12);
  EXPECT_NEAR((functional_factor(4.0) * (1.0 / 120.0)).real(), std::pow(kPi, 4) / 90.0, 1e-12);
  // theta(1 - s) = chi(s) theta(s) at s = 2 gives theta(-1) = 1/zeta(-1) = -12.
  const double theta2 = 1.0 / zeta_eval(2.0).real();
  EXPECT_NEAR((theta2 * functional_factor(2.0)).real(), -12.0, 1e-11);
  // Across the critical strip, chi(s) chi(1 - s) = 1.
  for (Complex s : {Complex{0.3, 0.0}, Complex{0.25, 5.0}, Complex{-2.5, 1.0}}) {
    EXPECT_NEAR(std::abs(functional_factor(s) * functional_factor(1.0 - s) - 1.0), 0.0, 1e-11)
        << s;
  }
}

TEST_F(EulerProductsTest, SmoothNumbersFactorEulerProduct) {
  // prod_{p <= 7} (1 - p^{-2})^{-1} = sum over 7-smooth k of k^{-2}.
  const double product = 1.0 / euler_partial_product(PowerParam::floating(2.0), 7, table()).real();
  constexpr std::uint64_t bound = 10000;
  const double partial = smooth_power_sum(2.0, 7, bound, table());
  // The smooth terms beyond the bound are crudely bounded by the full tail.
  const double tail = oracle::tail_bound(bound, 2.0);
  EXPECT_LE(partial, product);
  EXPECT_LE(product - partial, tail);

  double brute = 0.0;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    std::uint64_t m = k;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      while (m % p == 0) m /= p;
    }
    if (m == 1) brute += 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  }
  EXPECT_NEAR(partial, brute, 1e-14);
}

TEST_F(EulerProductsTest, MDecadeMaximaNonincreasing) {
  const auto maxima = m_decade_maxima(6, table());
  ASSERT_EQ(maxima.size(), 6u);
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    EXPECT_LE(maxima[i], maxima[i - 1]) << i;
  }
  EXPECT_LT(maxima.back(), 0.01);
}

}  // namespace
}  // namespace oscnum
