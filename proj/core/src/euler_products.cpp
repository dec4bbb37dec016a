#include "oscnum/euler_products.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oscnum/errors.hpp"
#include "oscnum/gamma.hpp"
#include "oscnum/int_math.hpp"
#include "oscnum/power_sums.hpp"
#include "oscnum/summation.hpp"

namespace oscnum {

SumValue euler_partial_product(const PowerParam& s, std::uint64_t p_max, const SieveTable& table) {
  if (p_max > table.limit()) {
    throw RangeError("prime bound " + std::to_string(p_max) + " exceeds sieve table limit " +
                     std::to_string(table.limit()));
  }
  if (s.is_exact()) {
    Rational product(1);
    for (std::uint64_t q = 2; q <= p_max; ++q) {
      if (table.is_prime(q)) product *= Rational(1) - exact_inverse_power(q, s.exact_value());
    }
    return product;
  }
  Complex product(1.0, 0.0);
  for (std::uint64_t q = 2; q <= p_max; ++q) {
    if (table.is_prime(q)) product *= 1.0 - float_inverse_power(q, s.value());
  }
  return product;
}

Complex zeta_eval(Complex s) {
  if (!(s.real() >= kZetaMinRe)) {
    throw DomainError("zeta_eval needs Re s >= " + format_double(kZetaMinRe) + ", got " +
                      format_complex(s));
  }
  constexpr std::uint64_t N = kZetaTerms;
  CompensatedComplexSum direct;
  for (std::uint64_t n = N - 1; n >= 1; --n) direct += float_inverse_power(n, s);

  const double nd = static_cast<double>(N);
  const Complex n_pow = float_inverse_power(N, s);  // N^{-s}
  Complex tail = nd * n_pow / (s - 1.0) + 0.5 * n_pow;
  // B_{2j}/(2j)! for j = 1..4.
  constexpr std::array<double, 4> kBernoulli{1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                             -1.0 / 1209600.0};
  Complex rising = s;               // s (s+1) ... (s+2j-2)
  Complex power = n_pow / nd;       // N^{-s-2j+1}
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    tail += kBernoulli[j] * rising * power;
    rising *= (s + static_cast<double>(2 * j + 1)) * (s + static_cast<double>(2 * j + 2));
    power /= nd * nd;
  }
  return direct.value() + tail;
}

SumValue theta_truncated(const PowerParam& s, double x, const SieveTable& table) {
  return oscillatory_power_sum(x, s, table);
}

ProductReport verify_reciprocal(double s, double x, const SieveTable& table) {
  if (!(s >= kReciprocalMinS)) {
    throw DomainError("reciprocal check needs real s >= " + format_double(kReciprocalMinS));
  }
  const std::uint64_t n = floor_arg(x);
  if (n == 0) throw DomainError("reciprocal check needs x >= 1");
  const PowerParam param = PowerParam::floating(s);
  const double zeta = zeta_eval(s).real();
  const double theta = theta_truncated(param, x, table).real();
  ProductReport r;
  r.s = param;
  r.cutoff = n;
  r.value = zeta * theta;
  r.reference = 1.0;
  r.residual = std::fabs(zeta * theta - 1.0);
  r.tolerance = zeta * std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
  return r;
}

Complex functional_factor(Complex s) {
  using std::numbers::pi;
  const bool integer = s.imag() == 0.0 && s.real() == std::floor(s.real());
  Complex value;
  if (integer && s.real() >= 1.0) {
    const auto k = static_cast<long long>(s.real());
    if (k % 2 != 0) throw DomainError("chi(s) has a pole at s = " + std::to_string(k));
    // cos(pi k/2) = (-1)^{k/2} for even k.
    const double cos_half = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    value = std::pow(Complex(2.0), s - 1.0) * std::pow(Complex(pi), s) * reciprocal_gamma(s) /
            cos_half;
  } else if (integer || s.real() < 0.5) {
    Complex sine;
    if (integer) {
      const auto k = static_cast<long long>(s.real());
      // sin(pi k/2) for k <= 0: 0 for even k, (-1)^{(k-1)/2} for odd k.
      if (k % 2 == 0) {
        sine = 0.0;
      } else {
        const long long m = (k - 1) / 2;  // floor for negative odd k
        sine = (m % 2 == 0) ? 1.0 : -1.0;
      }
    } else {
      sine = std::sin(pi * s / 2.0);
    }
    value = std::pow(Complex(2.0), s) * std::pow(Complex(pi), s - 1.0) * sine * gamma(1.0 - s);
  } else {
    const Complex cosine = std::cos(pi * s / 2.0);
    value = std::pow(Complex(2.0), s - 1.0) * std::pow(Complex(pi), s) * reciprocal_gamma(s) /
            cosine;
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DomainError("chi(s) overflows near a pole at s = " + format_complex(s));
  }
  return value;
}

Complex theta_functional_factor(Complex s) {
  const Complex chi = functional_factor(s);
  if (chi == Complex{0.0, 0.0}) {
    throw DomainError("chi(s) vanishes at s = " + format_complex(s) + "; reciprocal undefined");
  }
  return 1.0 / chi;
}

double smooth_power_sum(double s, std::uint64_t p_max, std::uint64_t bound,
                        const SieveTable& table) {
  const auto primes = primes_up_to(p_max, table);
  CompensatedSum acc;
  // Depth-first over exponent vectors; each smooth k is visited once.
  auto visit = [&](auto&& self, std::size_t index, std::uint64_t k) -> void {
    if (index == primes.size()) {
      acc += std::pow(static_cast<double>(k), -s);
      return;
    }
    for (std::uint64_t m = k;; m *= primes[index]) {
      self(self, index + 1, m);
      if (m > bound / primes[index]) break;
    }
  };
  visit(visit, 0, 1);
  return acc.value();
}

std::vector<double> m_decade_maxima(int decades, const SieveTable& table) {
  std::uint64_t top = 1;
  for (int j = 0; j < decades; ++j) top *= 10;
  if (top > table.limit()) {
    throw RangeError("decade scan to " + std::to_string(top) + " exceeds sieve table limit");
  }
  const auto mu = table.mu_values();
  std::vector<double> maxima;
  CompensatedSum m;
  std::uint64_t lo = 10;
  double current = 0.0;
  for (std::uint64_t k = 1; k <= top; ++k) {
    if (mu[k] != 0) m += mu[k] / static_cast<double>(k);
    if (k == top) break;
    if (k >= lo) {
      current = std::max(current, std::fabs(m.value()));
      if (k == lo * 10 - 1) {
        maxima.push_back(current);
        current = 0.0;
        lo *= 10;
      }
    }
  }
  maxima.push_back(std::fabs(m.value()));
  return maxima;
}

}  // namespace oscnum
