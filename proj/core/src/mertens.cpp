#include "oscnum/mertens.hpp"

#include <algorithm>
#include <cmath>

#include "oscnum/int_math.hpp"

namespace oscnum {

std::int64_t MertensMemo::operator()(double y) { return at(floor_arg(y)); }

std::int64_t MertensMemo::at(std::uint64_t n) {
  if (n <= table_->limit()) return table_->mertens_prefix(n);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(n); it != cache_.end()) return it->second;
  }
  const std::int64_t value = compute(n);
  std::lock_guard lock(mutex_);
  cache_.emplace(n, value);
  return value;
}

std::int64_t MertensMemo::compute(std::uint64_t n) {
  std::int64_t sum = 1;
  // k = 2 .. n in blocks where q = floor(n/k) is constant.
  for (std::uint64_t k = 2; k <= n;) {
    const std::uint64_t q = n / k;
    const std::uint64_t k_hi = n / q;
    sum -= static_cast<std::int64_t>(k_hi - k + 1) * at(q);
    k = k_hi + 1;
  }
  return sum;
}

std::size_t MertensMemo::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::uint64_t suggested_mertens_table_limit(std::uint64_t x) {
  const double t = std::cbrt(static_cast<double>(x));
  const auto limit = static_cast<std::uint64_t>(std::ceil(t * t));
  return std::clamp<std::uint64_t>(limit, 1000, std::max<std::uint64_t>(x, 1000));
}

}  // namespace oscnum
