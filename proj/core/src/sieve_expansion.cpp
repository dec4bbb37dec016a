#include "oscnum/sieve_expansion.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "oscnum/errors.hpp"
#include "oscnum/identities.hpp"
#include "oscnum/int_math.hpp"

namespace oscnum {

namespace {

using Clock = std::chrono::steady_clock;

void require_table(std::uint64_t n, const SieveTable& table) {
  if (n > table.limit()) {
    throw RangeError("argument " + std::to_string(n) + " exceeds sieve table limit " +
                     std::to_string(table.limit()));
  }
}

}  // namespace

SieveExpansion::SieveExpansion(const PowerParam& s, std::uint64_t max_argument,
                               const SieveTable& table)
    : s_(s), max_argument_(max_argument) {
  require_table(max_argument, table);
  primes_ = primes_up_to(max_argument, table);
  const bool closed_form = s.is_exact() && s.exact_value() <= 0;
  if (!closed_form) {
    prefix_ = std::make_unique<PowerSumPrefix>(PowerSumPrefix::Kind::harmonic, s, max_argument);
  }
}

SumValue SieveExpansion::inverse_power(std::uint64_t k) const {
  if (s_.is_exact()) return exact_inverse_power(k, s_.exact_value());
  return float_inverse_power(k, s_.value());
}

SumValue SieveExpansion::plain(std::uint64_t n) {
  if (n > max_argument_) {
    throw RangeError("argument " + std::to_string(n) + " exceeds expansion bound " +
                     std::to_string(max_argument_));
  }
  if (!prefix_) {
    const mpz_class m = detail::mpz_from_u64(n);
    if (s_.exact_value() == 0) return Rational(m);
    return Rational(mpz_class(m * (m + 1) / 2));  // s = -1
  }
  return prefix_->at(n);
}

void SieveExpansion::clear_cache() {
  std::lock_guard lock(mutex_);
  recurrence_memo_.clear();
  subtraction_memo_.clear();
}

std::size_t SieveExpansion::prime_index(std::uint64_t p) const {
  if (!is_prime_trial(p)) throw DomainError(std::to_string(p) + " is not prime");
  // Number of primes below p; may exceed primes_.size() when p lies past
  // max_argument.
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it != primes_.end()) return static_cast<std::size_t>(it - primes_.begin());
  return primes_.size() + 1;
}

SumValue SieveExpansion::recurrence(std::size_t index, std::uint64_t n) {
  if (n == 0) return SumValue::zero(s_.mode());
  if (index == 0) return plain(n);
  // Every k in 2..n has a prime factor <= n, all of which are sieved.
  if (index > primes_.size() || primes_[index - 1] >= n) return SumValue::one(s_.mode());
  const auto key = std::make_pair(index, n);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = recurrence_memo_.find(key); it != recurrence_memo_.end()) return it->second;
  }
  const std::uint64_t prev = primes_[index - 1];
  SumValue value = recurrence(index - 1, n) - inverse_power(prev) * recurrence(index - 1, n / prev);
  std::lock_guard lock(mutex_);
  recurrence_memo_.emplace(key, value);
  return value;
}

SumValue SieveExpansion::subtraction(std::size_t index, std::uint64_t n) {
  if (n == 0) return SumValue::zero(s_.mode());
  const auto key = std::make_pair(index, n);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = subtraction_memo_.find(key); it != subtraction_memo_.end()) {
      return it->second;
    }
  }
  SumValue value = plain(n);
  for (std::size_t j = 0; j < index && j < primes_.size(); ++j) {
    const std::uint64_t q = primes_[j];
    if (q > n) break;
    value -= inverse_power(q) * subtraction(j, n / q);
  }
  std::lock_guard lock(mutex_);
  subtraction_memo_.emplace(key, value);
  return value;
}

SumValue SieveExpansion::sieved(std::uint64_t n, std::uint64_t p) {
  return recurrence(prime_index(p), n);
}

SumValue SieveExpansion::sieved_by_subtraction(std::uint64_t n, std::uint64_t p) {
  return subtraction(prime_index(p), n);
}

SumValue SieveExpansion::reconstruct(std::uint64_t n) {
  if (n == 0) return SumValue::zero(s_.mode());
  SumValue total = SumValue::one(s_.mode());
  for (std::size_t j = 0; j < primes_.size() && primes_[j] <= n; ++j) {
    total += inverse_power(primes_[j]) * recurrence(j, n / primes_[j]);
  }
  return total;
}

std::vector<ExpansionEntry> SieveExpansion::entries(double x, std::uint64_t p_max) {
  const std::uint64_t n = floor_arg(x);
  std::vector<ExpansionEntry> out;
  for (std::size_t j = 0; j < primes_.size() && primes_[j] <= std::min(n, p_max); ++j) {
    const std::uint64_t q = primes_[j];
    out.push_back({q, x, recurrence(j, n)});
    out.push_back({q, x / static_cast<double>(q), recurrence(j, n / q)});
  }
  return out;
}

SumValue harmonic_sieved(double x, const PowerParam& s, std::uint64_t p, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  SieveExpansion expansion(s, n, table);
  return expansion.sieved(n, p);
}

IdentityReport reconstruct_harmonic(double x, const PowerParam& s, const SieveTable& table) {
  const auto t0 = Clock::now();
  const std::uint64_t n = floor_arg(x);
  SieveExpansion expansion(s, n, table);
  IdentityReport r;
  r.identity = s.is_exact() && s.exact_value() == 0 ? "EQ25" : "EQ11";
  r.x = x;
  r.s = s;
  r.mode = s.mode();
  r.expected = n == 0 ? SumValue::zero(s.mode()) : expansion.plain(n);
  r.computed = expansion.reconstruct(n);
  const double scale = std::max(1.0, r.expected.magnitude());
  r.tolerance = s.is_exact() ? 0.0
                             : 64.0 * static_cast<double>(std::max<std::uint64_t>(n, 1)) *
                                   std::numeric_limits<double>::epsilon() * scale;
  finalize_residual(r);
  r.elapsed = Clock::now() - t0;
  return r;
}

std::uint64_t coprime_count_oracle(double x, std::span<const std::uint64_t> primes) {
  if (primes.size() > kMaxOraclePrimes) {
    throw DomainError("inclusion-exclusion oracle accepts at most " +
                      std::to_string(kMaxOraclePrimes) + " primes, got " +
                      std::to_string(primes.size()));
  }
  const std::uint64_t n = floor_arg(x);
  std::int64_t total = 0;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t d = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i & 1U) == 0) continue;
      if (d > n / primes[i]) {
        overflow = true;  // d > n, term is zero
        break;
      }
      d *= primes[i];
    }
    if (overflow) continue;
    const auto term = static_cast<std::int64_t>(n / d);
    total += (std::popcount(mask) % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

// Squarefree divisors of the product of `primes`, with their Möbius sign.
std::vector<std::pair<std::uint64_t, int>> signed_divisors(std::span<const std::uint64_t> primes) {
  std::vector<std::pair<std::uint64_t, int>> out{{1, 1}};
  for (const std::uint64_t q : primes) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) {
      const auto [d, sign] = out[i];
      if (d > std::numeric_limits<std::uint64_t>::max() / q) continue;
      out.emplace_back(d * q, -sign);
    }
  }
  return out;
}

double ratio_tolerance(std::uint64_t n, double x, const PowerParam& s,
                       std::span<const std::uint64_t> sieved, double product_magnitude,
                       double harmonic_magnitude) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double rounding = s.is_exact() ? 0.0
                                       : 64.0 * static_cast<double>(n) * eps *
                                             std::max(1.0, harmonic_magnitude) /
                                             std::max(harmonic_magnitude, 1e-300);
  const Complex sv = s.value();
  if (sv == Complex{0.0, 0.0}) {
    // pi^(p)_x - x prod = -sum mu(d) {x/d}, each fractional part below 1.
    return std::ldexp(1.0, static_cast<int>(sieved.size())) / x + rounding;
  }
  const auto divisors = signed_divisors(sieved);
  const double sigma = sv.real();
  if (sv.imag() == 0.0 && sigma == 1.0) {
    // H_n - H_m <= log(n/m) for 1 <= m <= n.
    double bound = 0.0;
    for (const auto& [d, sign] : divisors) {
      const std::uint64_t m = n / d;
      const double gap = m == 0 ? harmonic_magnitude
                                : std::log(static_cast<double>(n) / static_cast<double>(m));
      bound += gap / static_cast<double>(d);
    }
    return bound / harmonic_magnitude + rounding;
  }
  if (sigma > 1.0) {
    // Tail sum_{k > m} k^{-sigma} <= m^{1-sigma}/(sigma-1), and <= zeta(sigma)
    // <= 1 + 1/(sigma-1) for m = 0.
    auto tail = [&](std::uint64_t m) {
      if (m == 0) return 1.0 + 1.0 / (sigma - 1.0);
      return std::pow(static_cast<double>(m), 1.0 - sigma) / (sigma - 1.0);
    };
    double bound = 0.0;
    for (const auto& [d, sign] : divisors) {
      bound += std::pow(static_cast<double>(d), -sigma) * (tail(n) + tail(n / d));
    }
    (void)product_magnitude;
    return bound / harmonic_magnitude + rounding;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

IdentityReport ratio_report(double x, const PowerParam& s_in, std::uint64_t p,
                            const SieveTable& table) {
  const auto t0 = Clock::now();
  const std::uint64_t n = floor_arg(x);
  if (n == 0) throw DomainError("ratio report needs x >= 1");
  const PowerParam s = (s_in.is_exact() && n > kRatioExactLimit) ? s_in.as_floating() : s_in;
  SieveExpansion expansion(s, n, table);
  const bool counting = s.value() == Complex{0.0, 0.0};

  std::vector<std::uint64_t> sieved;
  for (std::uint64_t q = 2; q < p; ++q) {
    if (is_prime_trial(q)) sieved.push_back(q);
  }

  IdentityReport r;
  r.x = x;
  r.s = s;
  r.mode = s.mode();
  r.requires_exact_zero = false;
  r.identity = counting ? "EQ32" : (s.value() == Complex{1.0, 0.0} ? "EQ22" : "EQ17");

  // The density of integers coprime to the sieved primes is
  // prod (1 - 1/q), so counting ratios compare against the s = 1 product.
  const PowerParam product_s =
      counting ? (s.is_exact() ? PowerParam::exact(1) : PowerParam::floating(1.0)) : s;
  SumValue product = SumValue::one(s.mode());
  for (const std::uint64_t q : sieved) {
    const SumValue qs = product_s.is_exact()
                            ? SumValue(exact_inverse_power(q, product_s.exact_value()))
                            : SumValue(float_inverse_power(q, product_s.value()));
    product *= SumValue::one(s.mode()) - qs;
  }
  r.expected = product;

  const SumValue numerator = expansion.sieved(n, p);
  SumValue denominator = counting ? (s.is_exact() ? SumValue(Rational(x)) : SumValue(x))
                                  : expansion.plain(n);
  r.computed = numerator / denominator;
  const double harmonic_magnitude = counting ? x : denominator.magnitude();
  r.tolerance = ratio_tolerance(n, x, s, sieved, product.magnitude(), harmonic_magnitude);
  finalize_residual(r);
  r.elapsed = Clock::now() - t0;
  return r;
}

double count_harmonic_ratio(double x, std::uint64_t p, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  if (n == 0) throw DomainError("ratio needs x >= 1");
  SieveExpansion counts(PowerParam::floating(0.0), n, table);
  SieveExpansion harmonic(PowerParam::floating(1.0), n, table);
  const double count = counts.sieved(n, p).real();
  const double h = harmonic.plain(n).real();
  const double hp = harmonic.sieved(n, p).real();
  return count * h / (x * hp);
}

std::string expansion_csv_header() { return "prime,argument,value"; }

std::string to_csv_row(const ExpansionEntry& e) {
  return std::to_string(e.prime) + ',' + format_double(e.argument) + ',' + e.value.to_string();
}

std::string to_json(const ExpansionEntry& e) {
  nlohmann::ordered_json j;
  j["prime"] = std::to_string(e.prime);
  j["argument"] = format_double(e.argument);
  j["value"] = e.value.to_string();
  return j.dump();
}

}  // namespace oscnum
