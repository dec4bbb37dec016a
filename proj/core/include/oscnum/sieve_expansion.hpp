#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oscnum/power_sums.hpp"
#include "oscnum/report.hpp"
#include "oscnum/sieve.hpp"

namespace oscnum {

// One recorded value H^(p)_y(s) (or the coprime count when s = 0).
struct ExpansionEntry {
  std::uint64_t prime;
  double argument;
  SumValue value;
};

// The sieved family H^(p)_y(s): the part of H_y(s) over k coprime to every
// prime below p, so H^(2) = H, H^(3) keeps odd k, H^(5) keeps k coprime to 6.
// Values depend only on floor(y); nested arguments y/q are therefore exact.
// Memoized by (prime index, floor(y)); the memo is mutex-guarded.
class SieveExpansion {
 public:
  // Arguments up to `max_argument`; the table supplies the primes.
  SieveExpansion(const PowerParam& s, std::uint64_t max_argument, const SieveTable& table);

  SieveExpansion(const SieveExpansion&) = delete;
  SieveExpansion& operator=(const SieveExpansion&) = delete;

  const PowerParam& param() const noexcept { return s_; }
  std::uint64_t max_argument() const noexcept { return max_argument_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }

  // H^(p)_n via H^(p) = H^(p-) - p-^{-s} H^(p-)_{n/p-}. Throws DomainError
  // when p is not prime.
  SumValue sieved(std::uint64_t n, std::uint64_t p);

  // Same family through the closed subtraction
  //   H^(p)_n = H_n - sum_{q < p} q^{-s} H^(q)_{n/q},
  // with its own memo, so the two routes can be compared.
  SumValue sieved_by_subtraction(std::uint64_t n, std::uint64_t p);

  // H_n(s).
  SumValue plain(std::uint64_t n);

  // Drops memoized values (the leaf prefix is kept).
  void clear_cache();

  // The prime expansion 1 + sum_{q <= n} q^{-s} H^(q)_{n/q}.
  SumValue reconstruct(std::uint64_t n);

  // (q, n, H^(q)_n) and (q, n/q, H^(q)_{n/q}) for each prime q <= p_max.
  std::vector<ExpansionEntry> entries(double x, std::uint64_t p_max);

 private:
  std::size_t prime_index(std::uint64_t p) const;
  SumValue recurrence(std::size_t index, std::uint64_t n);
  SumValue subtraction(std::size_t index, std::uint64_t n);
  SumValue inverse_power(std::uint64_t k) const;

  PowerParam s_;
  std::uint64_t max_argument_;
  std::vector<std::uint64_t> primes_;
  std::unique_ptr<PowerSumPrefix> prefix_;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::uint64_t>, SumValue> recurrence_memo_;
  std::map<std::pair<std::size_t, std::uint64_t>, SumValue> subtraction_memo_;
};

// H^(p)_x(s). Requires floor(x) <= table.limit().
SumValue harmonic_sieved(double x, const PowerParam& s, std::uint64_t p, const SieveTable& table);

// Rebuilds H_x(s) (floor(x) when s = 0) from its prime expansion; exact
// mode must give a zero residual.
IdentityReport reconstruct_harmonic(double x, const PowerParam& s, const SieveTable& table);

// |{k <= x : gcd(k, prod primes) = 1}| by inclusion-exclusion over the
// squarefree divisors of the product. At most kMaxOraclePrimes primes.
inline constexpr std::size_t kMaxOraclePrimes = 20;
std::uint64_t coprime_count_oracle(double x, std::span<const std::uint64_t> primes);

// Finite ratio H^(p)_x(s) / H_x(s) (pi^(p)_x / x when s = 0) against the
// Euler partial product prod_{q < p} (1 - q^{-s}). Exact mode is used only
// up to kRatioExactLimit. The tolerance is a rigorous finite-x bound where
// one is available (s = 0, real s >= 1, Re s > 1), infinite otherwise.
inline constexpr std::uint64_t kRatioExactLimit = 10000;
IdentityReport ratio_report(double x, const PowerParam& s, std::uint64_t p,
                            const SieveTable& table);

// pi^(p)_x H_x / (x H^(p)_x) at s = 1; reported, not asserted.
double count_harmonic_ratio(double x, std::uint64_t p, const SieveTable& table);

std::string expansion_csv_header();
std::string to_csv_row(const ExpansionEntry& entry);
std::string to_json(const ExpansionEntry& entry);

}  // namespace oscnum
