#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "oscnum/errors.hpp"
#include "oscnum/sieve_expansion.hpp"

namespace oscnum {
namespace {

class SieveExpansionTest : public ::testing::Test {
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

TEST_F(SieveExpansionTest, Examples) {
  EXPECT_EQ(harmonic_sieved(10, PowerParam::exact(1), 3, table()).rational(),
            Rational(563, 315));
  EXPECT_EQ(harmonic_sieved(10, PowerParam::exact(0), 5, table()).rational(), Rational(3));
  for (int s = 0; s <= 2; ++s) {
    EXPECT_EQ(harmonic_sieved(1, PowerParam::exact(s), 2, table()).rational(), Rational(1));
  }
  EXPECT_EQ(harmonic_sieved(0.5, PowerParam::exact(1), 7, table()).rational(), Rational(0));
}

TEST_F(SieveExpansionTest, NonPrimeSieveParameterRejected) {
  EXPECT_THROW(harmonic_sieved(10, PowerParam::exact(1), 4, table()), DomainError);
  EXPECT_THROW(harmonic_sieved(10, PowerParam::exact(1), 1, table()), DomainError);
}

TEST_F(SieveExpansionTest, MatchesTermByTermOracle) {
  SieveExpansion expansion(PowerParam::exact(2), 400, table());
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    const std::uint64_t modulus = oracle::primorial_below(p);
    for (std::uint64_t n : {1ULL, 2ULL, 29ULL, 210ULL, 400ULL}) {
      EXPECT_EQ(expansion.sieved(n, p).rational(), oracle::coprime_power_sum(n, 2, modulus))
          << "n=" << n << " p=" << p;
    }
  }
}

TEST_F(SieveExpansionTest, CountsMatchInclusionExclusion) {
  SieveExpansion expansion(PowerParam::exact(0), 20000, table());
  const std::vector<std::uint64_t> all{2, 3, 5, 7, 11};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::span<const std::uint64_t> below(all.data(), i);
    for (std::uint64_t n = 1; n <= 20000; n += 7) {
      ASSERT_EQ(expansion.sieved(n, all[i]).rational(),
                Rational(static_cast<long>(coprime_count_oracle(static_cast<double>(n), below))))
          << "n=" << n << " p=" << all[i];
    }
  }
}

TEST_F(SieveExpansionTest, CoprimeCountOracleExamples) {
  const std::vector<std::uint64_t> two{2};
  const std::vector<std::uint64_t> two_three{2, 3};
  EXPECT_EQ(coprime_count_oracle(10, two), 5u);
  EXPECT_EQ(coprime_count_oracle(10, two_three), 3u);
  EXPECT_EQ(coprime_count_oracle(0.5, two_three), 0u);
  EXPECT_EQ(coprime_count_oracle(10, {}), 10u);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    ASSERT_EQ(coprime_count_oracle(static_cast<double>(n), two_three),
              oracle::coprime_power_sum(n, 0, 6).get_num().get_ui());
  }
}

TEST_F(SieveExpansionTest, OracleRejectsTooManyPrimes) {
  const auto primes = primes_up_to(80, table());  // 22 primes
  ASSERT_GT(primes.size(), kMaxOraclePrimes);
  EXPECT_THROW(coprime_count_oracle(1000, primes), DomainError);
  EXPECT_NO_THROW(coprime_count_oracle(
      1000, std::span<const std::uint64_t>(primes.data(), kMaxOraclePrimes)));
}

TEST_F(SieveExpansionTest, SubtractionRouteEqualsRecurrence) {
  for (int s = -1; s <= 2; ++s) {
    SieveExpansion expansion(PowerParam::exact(s), 500, table());
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 23ULL, 97ULL}) {
      for (std::uint64_t n = 1; n <= 500; n += 13) {
        ASSERT_EQ(expansion.sieved(n, p), expansion.sieved_by_subtraction(n, p))
            << "n=" << n << " p=" << p << " s=" << s;
      }
    }
  }
}

TEST_F(SieveExpansionTest, ReconstructionExamples) {
  const auto ten = reconstruct_harmonic(10, PowerParam::exact(0), table());
  EXPECT_EQ(ten.identity, "EQ25");
  EXPECT_EQ(ten.expected.rational(), Rational(10));
  EXPECT_EQ(*ten.exact_residual, 0);

  // 10 = 1 + pi(2)_5 + pi(3)_{10/3} + pi(5)_2 + pi(7)_{10/7}, term by term.
  SieveExpansion count(PowerParam::exact(0), 10, table());
  EXPECT_EQ(count.sieved(5, 2).rational(), Rational(5));
  EXPECT_EQ(count.sieved(3, 3).rational(), Rational(2));
  EXPECT_EQ(count.sieved(2, 5).rational(), Rational(1));
  EXPECT_EQ(count.sieved(1, 7).rational(), Rational(1));
  EXPECT_EQ(count.reconstruct(10).rational(), Rational(10));

  const auto one = reconstruct_harmonic(1, PowerParam::exact(1), table());
  EXPECT_EQ(one.identity, "EQ11");
  EXPECT_EQ(*one.exact_residual, 0);
  EXPECT_EQ(*reconstruct_harmonic(100, PowerParam::exact(2), table()).exact_residual, 0);
}

TEST_F(SieveExpansionTest, ReconstructionFloat) {
  const auto r = reconstruct_harmonic(5000, PowerParam::floating(Complex{0.5, 7.0}), table());
  EXPECT_TRUE(r.passed()) << r.residual;
}

TEST_F(SieveExpansionTest, OddPartRelation) {
  // H(3)_x / H_x = 1 - (1/2) H_{x/2} / H_x.
  SieveExpansion expansion(PowerParam::exact(1), 1000, table());
  for (std::uint64_t n = 1; n <= 1000; n += 37) {
    const Rational h = expansion.plain(n).rational();
    const Rational lhs = expansion.sieved(n, 3).rational() / h;
    const Rational rhs = 1 - Rational(1, 2) * expansion.plain(n / 2).rational() / h;
    ASSERT_EQ(lhs, rhs) << n;
  }
}

TEST_F(SieveExpansionTest, RatioExamples) {
  const auto nothing = ratio_report(10, PowerParam::exact(0), 2, table());
  EXPECT_EQ(nothing.identity, "EQ32");
  EXPECT_EQ(nothing.computed.rational(), Rational(1));
  EXPECT_EQ(nothing.residual, 0.0);

  const auto count = ratio_report(1e6, PowerParam::exact(0), 7, table());
  EXPECT_EQ(count.mode, Mode::floating);
  EXPECT_NEAR(count.expected.real(), 4.0 / 15.0, 1e-15);
  EXPECT_LE(std::fabs(count.computed.real() - 4.0 / 15.0), 8e-6);
  EXPECT_TRUE(count.passed());

  const auto square = ratio_report(1e6, PowerParam::exact(2), 3, table());
  EXPECT_EQ(square.identity, "EQ17");
  EXPECT_NEAR(square.computed.real(), 0.75, 1e-5);
  EXPECT_TRUE(square.passed());

  const auto harmonic = ratio_report(1000, PowerParam::exact(1), 5, table());
  EXPECT_EQ(harmonic.identity, "EQ22");
  EXPECT_EQ(harmonic.mode, Mode::exact);
  EXPECT_TRUE(harmonic.passed()) << harmonic.residual << " > " << harmonic.tolerance;
}

TEST_F(SieveExpansionTest, CountHarmonicRatioIsReported) {
  const double r = count_harmonic_ratio(1e5, 7, table());
  EXPECT_TRUE(std::isfinite(r));
  EXPECT_GT(r, 0.5);
  EXPECT_LT(r, 2.0);
}

TEST_F(SieveExpansionTest, EntriesAndSerialization) {
  SieveExpansion expansion(PowerParam::exact(0), 10, table());
  const auto entries = expansion.entries(10, 5);
  ASSERT_FALSE(entries.empty());
  EXPECT_EQ(expansion_csv_header(), "prime,argument,value");
  bool found = false;
  for (const auto& e : entries) {
    if (e.prime == 3 && e.argument == 10) {
      EXPECT_EQ(to_csv_row(e), "3,10,5");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(SieveExpansionTest, ClearCacheKeepsValues) {
  SieveExpansion expansion(PowerParam::exact(1), 300, table());
  const SumValue before = expansion.sieved(300, 7);
  expansion.clear_cache();
  EXPECT_EQ(expansion.sieved(300, 7), before);
}

}  // namespace
}  // namespace oscnum
