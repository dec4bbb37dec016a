#pragma once

#include <cstdint>
#include <vector>

#include "oscnum/sieve.hpp"
#include "oscnum/values.hpp"

namespace oscnum {

// Euler's constant to 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// H_x(s) = sum_{k <= x} k^{-s}. x < 1 is the empty sum.
SumValue harmonic_power_sum(double x, const PowerParam& s);

// M_x(s) = sum_{k <= x} mu(k) k^{-s}. Requires floor(x) <= table.limit().
SumValue oscillatory_power_sum(double x, const PowerParam& s, const SieveTable& table);

// log n + gamma plus `order` (0..3) correction terms 1/(2n), -1/(12n^2),
// 1/(120n^4), with n = floor(y) >= 1.
double harmonic_asymptotic(double y, int order);

// One maximal run of k with constant floor(x/k).
struct QuotientBlock {
  std::uint64_t quotient;
  std::uint64_t k_lo;
  std::uint64_t k_hi;
  friend bool operator==(const QuotientBlock&, const QuotientBlock&) = default;
};

// Partition of 1..floor(x) into blocks of constant floor(x/k), ascending k.
std::vector<QuotientBlock> floor_quotient_blocks(double x);

template <typename Fn>
void for_each_quotient_block(std::uint64_t n, Fn&& fn) {
  for (std::uint64_t k = 1; k <= n;) {
    const std::uint64_t q = n / k;
    const std::uint64_t k_hi = n / q;
    fn(QuotientBlock{q, k, k_hi});
    k = k_hi + 1;
  }
}

// Running values of H_n(s) or M_n(s) for n = 0..N, built once and queried
// at many arguments. Exact mode keeps every prefix as a rational, so keep
// N modest there (a few thousand for s >= 1).
class PowerSumPrefix {
 public:
  enum class Kind { harmonic, oscillatory };

  // Oscillatory prefixes need a table covering `limit`.
  PowerSumPrefix(Kind kind, const PowerParam& s, std::uint64_t limit,
                 const SieveTable* table = nullptr);

  Kind kind() const noexcept { return kind_; }
  const PowerParam& param() const noexcept { return s_; }
  std::uint64_t limit() const noexcept { return limit_; }

  // Value at floor(y), 0 <= floor(y) <= limit.
  SumValue at(std::uint64_t n) const;
  SumValue operator()(double y) const;

  // Largest |partial sum| seen over 0..limit (float mode), used for rounding
  // budgets.
  double max_magnitude() const noexcept { return max_magnitude_; }

 private:
  Kind kind_;
  PowerParam s_;
  std::uint64_t limit_;
  std::vector<Rational> exact_;
  std::vector<Complex> floating_;
  double max_magnitude_ = 0.0;
};

// Sum of c_k k^{-s} for k in [1, n] in exact arithmetic by binary
// splitting. `coeff(k)` returns an integer coefficient.
template <typename Coeff>
Rational exact_weighted_power_sum(std::uint64_t n, int s, Coeff&& coeff);

}  // namespace oscnum

#include "oscnum/power_sums_impl.hpp"
