#include "oscnum/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oscnum/errors.hpp"
#include "oscnum/summation.hpp"

namespace oscnum {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_table(std::uint64_t n, const SieveTable& table) {
  if (n > table.limit()) {
    throw RangeError("argument " + std::to_string(n) + " exceeds sieve table limit " +
                     std::to_string(table.limit()));
  }
}

// Rounding budget for a float sum of n terms whose partial sums stay below
// `scale` in magnitude.
double rounding_budget(std::uint64_t n, double scale) {
  return static_cast<double>(std::max<std::uint64_t>(n, 1)) * kEps * std::max(scale, 1.0);
}

IdentityReport start_report(std::string id, double x, std::optional<PowerParam> s, Mode mode) {
  IdentityReport r;
  r.identity = std::move(id);
  r.x = x;
  r.s = std::move(s);
  r.mode = mode;
  return r;
}

void finish(IdentityReport& r, Clock::time_point t0) {
  finalize_residual(r);
  r.elapsed = Clock::now() - t0;
}

SumValue signed_term(const SumValue& v, int sign) { return sign > 0 ? v : -v; }

// Running-sum helper that tracks the largest partial magnitude.
class Accumulator {
 public:
  explicit Accumulator(Mode mode) : mode_(mode), exact_(0) {}

  void add(const SumValue& v) {
    if (mode_ == Mode::exact) {
      exact_ += v.rational();
    } else {
      floating_ += v.to_complex();
      max_ = std::max(max_, std::abs(floating_.value()));
    }
  }
  SumValue value() const {
    if (mode_ == Mode::exact) return SumValue(exact_);
    return SumValue(floating_.value());
  }
  double max_partial() const { return max_; }

 private:
  Mode mode_;
  Rational exact_;
  CompensatedComplexSum floating_;
  double max_ = 0.0;
};

SumValue inverse_power(std::uint64_t k, const PowerParam& s) {
  if (s.is_exact()) return exact_inverse_power(k, s.exact_value());
  return float_inverse_power(k, s.value());
}

}  // namespace

IdentityReport verify_harmonic_identity(double x, const PowerParam& s, const SieveTable& table) {
  const auto t0 = Clock::now();
  const std::uint64_t n = floor_arg(x);
  require_table(n, table);
  IdentityReport r = start_report("EQ4", x, s, s.mode());
  r.expected = SumValue::one(s.mode());
  const PowerSumPrefix harmonic(PowerSumPrefix::Kind::harmonic, s, n);
  const auto mu = table.mu_values();
  Accumulator acc(s.mode());
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;
    acc.add(signed_term(inverse_power(k, s) * harmonic.at(n / k), mu[k]));
  }
  r.computed = n == 0 ? SumValue::zero(s.mode()) : acc.value();
  r.tolerance = s.is_exact() ? 0.0
                             : rounding_budget(n, std::max(acc.max_partial(), harmonic.max_magnitude()));
  finish(r, t0);
  return r;
}

IdentityReport verify_oscillatory_identity(double x, const PowerParam& s,
                                           const SieveTable& table) {
  const auto t0 = Clock::now();
  const std::uint64_t n = floor_arg(x);
  require_table(n, table);
  IdentityReport r = start_report("EQ38", x, s, s.mode());
  r.expected = SumValue::one(s.mode());
  const PowerSumPrefix oscillatory(PowerSumPrefix::Kind::oscillatory, s, n, &table);
  Accumulator acc(s.mode());
  for (std::uint64_t k = 1; k <= n; ++k) acc.add(inverse_power(k, s) * oscillatory.at(n / k));
  r.computed = n == 0 ? SumValue::zero(s.mode()) : acc.value();
  r.tolerance = s.is_exact()
                    ? 0.0
                    : rounding_budget(n, std::max(acc.max_partial(), oscillatory.max_magnitude()));
  finish(r, t0);
  return r;
}

std::int64_t floor_identity_sum(std::uint64_t n, const SieveTable& table) {
  require_table(n, table);
  std::int64_t total = 0;
  for_each_quotient_block(n, [&](const QuotientBlock& b) {
    const std::int64_t weight = table.mertens_prefix(b.k_hi) - table.mertens_prefix(b.k_lo - 1);
    total += weight * static_cast<std::int64_t>(b.quotient);
  });
  return total;
}

std::int64_t mertens_identity_sum(std::uint64_t n, const SieveTable& table) {
  require_table(n, table);
  std::int64_t total = 0;
  for_each_quotient_block(n, [&](const QuotientBlock& b) {
    total += static_cast<std::int64_t>(b.k_hi - b.k_lo + 1) * table.mertens_prefix(b.quotient);
  });
  return total;
}

IdentityReport verify_floor_identity(double x, const SieveTable& table) {
  const auto t0 = Clock::now();
  IdentityReport r = start_report("EQ9", x, std::nullopt, Mode::exact);
  r.expected = Rational(1);
  r.computed = Rational(floor_identity_sum(floor_arg(x), table));
  finish(r, t0);
  return r;
}

IdentityReport verify_mertens_identity(double x, const SieveTable& table) {
  const auto t0 = Clock::now();
  IdentityReport r = start_report("EQ42", x, PowerParam::exact(0), Mode::exact);
  r.expected = Rational(1);
  r.computed = Rational(mertens_identity_sum(floor_arg(x), table));
  finish(r, t0);
  return r;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t primorial(std::uint64_t p) {
  if (!is_prime_trial(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::uint64_t product = 1;
  for (std::uint64_t q = 2; q <= p; ++q) {
    if (!is_prime_trial(q)) continue;
    if (product > std::numeric_limits<std::uint64_t>::max() / q) {
      throw RangeError("primorial of " + std::to_string(p) + " overflows 64 bits");
    }
    product *= q;
  }
  return product;
}

IdentityReport verify_sieved_oscillatory(double x, const PowerParam& s, std::uint64_t p,
                                         const SieveTable& table) {
  const auto t0 = Clock::now();
  const std::uint64_t n = floor_arg(x);
  const std::uint64_t p_sharp = primorial(p);
  if (n < p_sharp) {
    throw PreconditionError("sieving through " + std::to_string(p) + " needs x >= " +
                                std::to_string(p_sharp) + " (primorial), got x = " +
                                std::to_string(n),
                            p_sharp);
  }
  require_table(n, table);
  IdentityReport r = start_report(s.is_exact() && s.exact_value() == 0 ? "EQ50" : "EQ47", x, s,
                                  s.mode());

  SumValue expected = SumValue::one(s.mode());
  for (std::uint64_t q = 2; q <= p; ++q) {
    if (is_prime_trial(q)) expected *= SumValue::one(s.mode()) - inverse_power(q, s);
  }
  r.expected = expected;

  const PowerSumPrefix oscillatory(PowerSumPrefix::Kind::oscillatory, s, n, &table);
  Accumulator acc(s.mode());
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, p_sharp) != 1) continue;
    acc.add(inverse_power(k, s) * oscillatory.at(n / k));
  }
  r.computed = acc.value();
  r.tolerance = s.is_exact()
                    ? 0.0
                    : rounding_budget(n, std::max(acc.max_partial(), oscillatory.max_magnitude()));
  finish(r, t0);
  return r;
}

double log_weighted_mu_sum(double x, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  require_table(n, table);
  const auto mu = table.mu_values();
  CompensatedSum acc;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (mu[k] == 0) continue;
    const double kd = static_cast<double>(k);
    acc += mu[k] * std::log(kd) / kd;
  }
  return acc.value();
}

IdentityReport log_weighted_mu_residual(double x, const SieveTable& table) {
  const auto t0 = Clock::now();
  const std::uint64_t n = floor_arg(x);
  require_table(n, table);
  if (n == 0) throw DomainError("log-weighted Möbius sum needs x >= 1");
  IdentityReport r = start_report("EQ8", x, std::nullopt, Mode::floating);

  const auto mu = table.mu_values();
  CompensatedSum m_small;  // m_x
  CompensatedSum m_neg;    // M_x(-1) = sum mu(k) k
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;
    const double kd = static_cast<double>(k);
    m_small += mu[k] / kd;
    m_neg += mu[k] * kd;
  }
  const double mertens = static_cast<double>(table.mertens_prefix(n));
  const double rhs = -1.0 + (std::log(x) + kEulerGamma) * m_small.value() + mertens / (2.0 * x) -
                     m_neg.value() / (12.0 * x * x);
  r.expected = rhs;
  r.computed = log_weighted_mu_sum(x, table);
  r.tolerance = kLogWeightedTolerance;
  finish(r, t0);
  return r;
}

}  // namespace oscnum
