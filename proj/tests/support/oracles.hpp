#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's sieve, prefix or splitting code paths.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oscnum::oracle {

inline int mu(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

inline std::int64_t mertens(std::uint64_t n) {
  std::int64_t m = 0;
  for (std::uint64_t k = 1; k <= n; ++k) m += mu(k);
  return m;
}

inline double von_mangoldt(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return 0.0;
}

// k^{-s} exactly, s >= -1.
inline mpq_class inverse_power(std::uint64_t k, int s) {
  mpz_class base(static_cast<unsigned long>(k));
  mpz_class p = 1;
  for (int i = 0; i < std::abs(s); ++i) p *= base;
  return s >= 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

// sum_{k <= n, gcd(k, modulus) = 1} k^{-s}, accumulated term by term.
inline mpq_class coprime_power_sum(std::uint64_t n, int s, std::uint64_t modulus = 1) {
  mpq_class total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, modulus) == 1) total += inverse_power(k, s);
  }
  return total;
}

inline mpq_class harmonic(std::uint64_t n, int s) { return coprime_power_sum(n, s, 1); }

inline mpq_class oscillatory(std::uint64_t n, int s) {
  mpq_class total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const int m = mu(k);
    if (m != 0) total += m * inverse_power(k, s);
  }
  return total;
}

inline std::uint64_t primorial_below(std::uint64_t p) {
  std::uint64_t product = 1;
  for (std::uint64_t q = 2; q < p; ++q) {
    if (is_prime(q)) product *= q;
  }
  return product;
}

// Tail sum_{k > n} k^{-s} for real s > 1, bounded above by the integral.
inline double tail_bound(std::uint64_t n, double s) {
  return std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
}

}  // namespace oscnum::oracle
