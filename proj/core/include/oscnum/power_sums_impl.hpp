#pragma once

// Binary-splitting kernel behind exact_weighted_power_sum.

#include <utility>

namespace oscnum {
namespace detail {

inline mpz_class mpz_from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

// sum_{k=a}^{b-1} c_k / k^s as an unreduced fraction num/den, s >= 1.
template <typename Coeff>
std::pair<mpz_class, mpz_class> split_power_sum(std::uint64_t a, std::uint64_t b, int s,
                                                Coeff& coeff) {
  if (b - a == 1) {
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), mpz_from_u64(a).get_mpz_t(), static_cast<unsigned long>(s));
    return {mpz_class(static_cast<long>(coeff(a))), den};
  }
  const std::uint64_t mid = a + (b - a) / 2;
  auto [ln, ld] = split_power_sum(a, mid, s, coeff);
  auto [rn, rd] = split_power_sum(mid, b, s, coeff);
  mpz_class num = ln * rd + rn * ld;
  mpz_class den = ld * rd;
  return {std::move(num), std::move(den)};
}

}  // namespace detail

template <typename Coeff>
Rational exact_weighted_power_sum(std::uint64_t n, int s, Coeff&& coeff) {
  if (n == 0) return Rational(0);
  if (s <= 0) {
    // Integer terms c_k k^{|s|}.
    mpz_class total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const long c = static_cast<long>(coeff(k));
      if (c == 0) continue;
      mpz_class term;
      mpz_pow_ui(term.get_mpz_t(), detail::mpz_from_u64(k).get_mpz_t(),
                 static_cast<unsigned long>(-s));
      total += c * term;
    }
    return Rational(total);
  }
  auto [num, den] = detail::split_power_sum(1, n + 1, s, coeff);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace oscnum
