#include "oscnum/power_sums.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscnum/errors.hpp"
#include "oscnum/int_math.hpp"
#include "oscnum/summation.hpp"

namespace oscnum {

namespace {

void require_table(std::uint64_t n, const SieveTable& table) {
  if (n > table.limit()) {
    throw RangeError("argument " + std::to_string(n) + " exceeds sieve table limit " +
                     std::to_string(table.limit()));
  }
}

}  // namespace

SumValue harmonic_power_sum(double x, const PowerParam& s) {
  const std::uint64_t n = floor_arg(x);
  if (s.is_exact()) {
    const int e = s.exact_value();
    if (e == 0) return Rational(detail::mpz_from_u64(n));
    return exact_weighted_power_sum(n, e, [](std::uint64_t) { return 1; });
  }
  CompensatedComplexSum acc;
  // Smallest terms first when the terms decrease.
  if (s.real() > 0.0) {
    for (std::uint64_t k = n; k >= 1; --k) acc += float_inverse_power(k, s.value());
  } else {
    for (std::uint64_t k = 1; k <= n; ++k) acc += float_inverse_power(k, s.value());
  }
  return acc.value();
}

SumValue oscillatory_power_sum(double x, const PowerParam& s, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  require_table(n, table);
  if (s.is_exact()) {
    const int e = s.exact_value();
    if (e == 0) return Rational(table.mertens_prefix(n));
    return exact_weighted_power_sum(n, e, [&](std::uint64_t k) { return table.mu(k); });
  }
  const auto mu = table.mu_values();
  CompensatedComplexSum acc;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;
    const Complex term = float_inverse_power(k, s.value());
    acc += mu[k] > 0 ? term : -term;
  }
  return acc.value();
}

double harmonic_asymptotic(double y, int order) {
  if (order < 0 || order > 3) throw DomainError("asymptotic order must be in 0..3");
  const std::uint64_t n = floor_arg(y);
  if (n < 1) throw DomainError("asymptotic expansion needs y >= 1");
  const double nd = static_cast<double>(n);
  double value = std::log(nd) + kEulerGamma;
  if (order >= 1) value += 1.0 / (2.0 * nd);
  if (order >= 2) value -= 1.0 / (12.0 * nd * nd);
  if (order >= 3) value += 1.0 / (120.0 * nd * nd * nd * nd);
  return value;
}

std::vector<QuotientBlock> floor_quotient_blocks(double x) {
  std::vector<QuotientBlock> blocks;
  for_each_quotient_block(floor_arg(x), [&](const QuotientBlock& b) { blocks.push_back(b); });
  return blocks;
}

PowerSumPrefix::PowerSumPrefix(Kind kind, const PowerParam& s, std::uint64_t limit,
                               const SieveTable* table)
    : kind_(kind), s_(s), limit_(limit) {
  if (kind == Kind::oscillatory) {
    if (table == nullptr) throw DomainError("oscillatory prefix needs a sieve table");
    require_table(limit, *table);
  }
  auto coeff = [&](std::uint64_t k) -> int {
    return kind == Kind::harmonic ? 1 : table->mu(k);
  };
  if (s.is_exact()) {
    const int e = s.exact_value();
    exact_.reserve(limit + 1);
    exact_.emplace_back(0);
    for (std::uint64_t k = 1; k <= limit; ++k) {
      const int c = coeff(k);
      Rational next = exact_.back();
      if (c != 0) {
        Rational term = exact_inverse_power(k, e);
        if (c > 0) {
          next += term;
        } else {
          next -= term;
        }
      }
      exact_.push_back(std::move(next));
    }
    return;
  }
  floating_.reserve(limit + 1);
  floating_.emplace_back(0.0, 0.0);
  CompensatedComplexSum acc;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    const int c = coeff(k);
    if (c != 0) {
      const Complex term = float_inverse_power(k, s.value());
      acc += c > 0 ? term : -term;
    }
    floating_.push_back(acc.value());
    max_magnitude_ = std::max(max_magnitude_, std::abs(floating_.back()));
  }
}

SumValue PowerSumPrefix::at(std::uint64_t n) const {
  if (n > limit_) {
    throw RangeError("prefix argument " + std::to_string(n) + " exceeds " +
                     std::to_string(limit_));
  }
  if (s_.is_exact()) return exact_[n];
  return floating_[n];
}

SumValue PowerSumPrefix::operator()(double y) const { return at(floor_arg(y)); }

}  // namespace oscnum
