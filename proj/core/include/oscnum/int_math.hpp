#pragma once

#include <cmath>
#include <cstdint>

namespace oscnum {

constexpr std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// floor(x) for real arguments; negative and sub-unit values map to 0 (the
// empty-sum convention).
std::uint64_t floor_arg(double x);

}  // namespace oscnum
