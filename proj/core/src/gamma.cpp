#include "oscnum/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "oscnum/errors.hpp"

namespace oscnum {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Gamma for Re z >= 1/2.
Complex lanczos(Complex z) {
  z -= 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

// sin(pi z) with exact zeros at the integers.
Complex sin_pi(Complex z) {
  if (z.imag() == 0.0 && z.real() == std::floor(z.real())) return 0.0;
  return std::sin(std::numbers::pi * z);
}

}  // namespace

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw DomainError("Gamma has a pole at a non-positive integer");
  if (z.imag() == 0.0) return std::tgamma(z.real());
  if (z.real() < 0.5) return std::numbers::pi / (sin_pi(z) * lanczos(1.0 - z));
  return lanczos(z);
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.imag() == 0.0) return 1.0 / std::tgamma(z.real());
  if (z.real() < 0.5) return sin_pi(z) * lanczos(1.0 - z) / std::numbers::pi;
  return 1.0 / lanczos(z);
}

}  // namespace oscnum
