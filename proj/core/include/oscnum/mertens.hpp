#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "oscnum/sieve.hpp"

namespace oscnum {

// Mertens function beyond a sieve table, via
//   M(n) = 1 - sum_{k=2}^{n} M(floor(n/k)),
// summed over the O(sqrt n) blocks of constant floor(n/k). Arguments up to
// table.limit() come straight from the prefix sums. The cache is guarded by
// a mutex, so concurrent callers see the same values as serial callers.
class MertensMemo {
 public:
  explicit MertensMemo(const SieveTable& table) : table_(&table) {}

  MertensMemo(const MertensMemo&) = delete;
  MertensMemo& operator=(const MertensMemo&) = delete;

  const SieveTable& table() const noexcept { return *table_; }

  // M(floor(y)); y < 1 gives 0.
  std::int64_t operator()(double y);
  std::int64_t at(std::uint64_t n);

  std::size_t cache_size() const;

 private:
  std::int64_t compute(std::uint64_t n);

  const SieveTable* table_;
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::int64_t> cache_;
};

inline std::int64_t mertens(double y, MertensMemo& memo) { return memo(y); }

// Table size that balances sieve cost against the recurrence for M(x):
// about x^(2/3), never below 1000.
std::uint64_t suggested_mertens_table_limit(std::uint64_t x);

}  // namespace oscnum
