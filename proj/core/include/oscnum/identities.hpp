#pragma once

#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>

#include "oscnum/int_math.hpp"
#include "oscnum/power_sums.hpp"
#include "oscnum/report.hpp"
#include "oscnum/sieve.hpp"

namespace oscnum {

namespace detail {

template <typename R>
R scaled(const R& value, std::int64_t count) {
  if constexpr (std::is_same_v<R, SumValue>) {
    if (value.is_exact()) return SumValue(Rational(value.rational() * count));
    return SumValue(value.to_complex() * static_cast<double>(count));
  } else {
    return value * static_cast<R>(count);
  }
}

}  // namespace detail

// G(x) = sum_{k <= x} F(x/k). Returns a value-initialized R for x < 1.
template <typename F>
auto mobius_forward(F&& f, double x) {
  using R = std::decay_t<std::invoke_result_t<F&, double>>;
  const std::uint64_t n = floor_arg(x);
  if (n == 0) return R{};
  R total = f(x);
  for (std::uint64_t k = 2; k <= n; ++k) total += f(x / static_cast<double>(k));
  return total;
}

// F(x) = sum_{k <= x} mu(k) G(x/k). Requires floor(x) <= table.limit().
template <typename G>
auto mobius_inverse(G&& g, double x, const SieveTable& table) {
  using R = std::decay_t<std::invoke_result_t<G&, double>>;
  const std::uint64_t n = floor_arg(x);
  if (n == 0) return R{};
  const auto mu = table.mu_values();
  if (n > table.limit()) (void)table.mu(n);  // throws RangeError
  R total = g(x);
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (mu[k] > 0) {
      total += g(x / static_cast<double>(k));
    } else if (mu[k] < 0) {
      total -= g(x / static_cast<double>(k));
    }
  }
  return total;
}

// Forward transform for F that depends only on floor of its argument,
// evaluated once per floor-quotient block.
template <typename F>
auto mobius_forward_floor(F&& f, std::uint64_t n) {
  using R = std::decay_t<std::invoke_result_t<F&, std::uint64_t>>;
  std::optional<R> total;
  for_each_quotient_block(n, [&](const QuotientBlock& b) {
    R term = detail::scaled(R(f(b.quotient)), static_cast<std::int64_t>(b.k_hi - b.k_lo + 1));
    if (total) {
      *total += term;
    } else {
      total = std::move(term);
    }
  });
  return total ? std::move(*total) : R{};
}

// Inverse transform for floor-dependent G; blocks are weighted by Mertens
// differences.
template <typename G>
auto mobius_inverse_floor(G&& g, std::uint64_t n, const SieveTable& table) {
  using R = std::decay_t<std::invoke_result_t<G&, std::uint64_t>>;
  if (n == 0) return R{};
  if (n > table.limit()) (void)table.mu(n);  // throws RangeError
  std::optional<R> total;
  for_each_quotient_block(n, [&](const QuotientBlock& b) {
    const std::int64_t weight =
        table.mertens_prefix(b.k_hi) - table.mertens_prefix(b.k_lo - 1);
    R term = detail::scaled(R(g(b.quotient)), weight);
    if (total) {
      *total += term;
    } else {
      total = std::move(term);
    }
  });
  return std::move(*total);
}

// sum_k mu(k) k^{-s} H_{x/k}(s) = 1.
IdentityReport verify_harmonic_identity(double x, const PowerParam& s, const SieveTable& table);

// sum_k k^{-s} M_{x/k}(s) = 1 (s = 1 and s = 0 are the m_x and Mertens cases).
IdentityReport verify_oscillatory_identity(double x, const PowerParam& s,
                                           const SieveTable& table);

// sum_k mu(k) floor(x/k) = 1 in integer arithmetic.
IdentityReport verify_floor_identity(double x, const SieveTable& table);

// sum_k M(floor(x/k)) = 1 in integer arithmetic.
IdentityReport verify_mertens_identity(double x, const SieveTable& table);

// Integer checks behind the two reports above, exposed for bulk sweeps.
std::int64_t floor_identity_sum(std::uint64_t n, const SieveTable& table);
std::int64_t mertens_identity_sum(std::uint64_t n, const SieveTable& table);

// Oscillatory identity with the multiples of every prime <= p removed:
//   sum_{k <= x, gcd(k, p#) = 1} k^{-s} M_{x/k}(s) = prod_{q <= p} (1 - q^{-s}).
// Requires floor(x) >= p#; throws PreconditionError carrying p# otherwise.
IdentityReport verify_sieved_oscillatory(double x, const PowerParam& s, std::uint64_t p,
                                         const SieveTable& table);

// Product of the primes <= p; throws DomainError when p is not prime and
// RangeError when the product overflows 64 bits.
std::uint64_t primorial(std::uint64_t p);

// Log-weighted Möbius sum against its asymptotic right-hand side:
//   sum mu(k) log k / k  vs  -1 + (log x + gamma) m_x + M_x/(2x) - M_x(-1)/(12x^2).
// Approximate relation; the report's tolerance is kLogWeightedTolerance.
IdentityReport log_weighted_mu_residual(double x, const SieveTable& table);
inline constexpr double kLogWeightedTolerance = 0.1;

// Helpers shared with the tests.
double log_weighted_mu_sum(double x, const SieveTable& table);
bool is_prime_trial(std::uint64_t n);

}  // namespace oscnum
