#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace oscnum {

using Rational = mpq_class;
using Complex = std::complex<double>;

enum class Mode { exact, floating };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

// Exponent s of a power sum. Exact mode carries a small integer, float
// mode an arbitrary complex number.
class PowerParam {
 public:
  static constexpr int kMinExact = -1;
  static constexpr int kMaxExact = 4;

  // Throws DomainError unless kMinExact <= s <= kMaxExact.
  static PowerParam exact(int s);
  static PowerParam floating(Complex s);
  static PowerParam floating(double s) { return floating(Complex{s, 0.0}); }

  Mode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == Mode::exact; }
  int exact_value() const;  // throws DomainError in float mode
  Complex value() const noexcept { return value_; }
  bool is_real() const noexcept { return value_.imag() == 0.0; }
  double real() const noexcept { return value_.real(); }

  // The same exponent re-tagged for float evaluation.
  PowerParam as_floating() const { return floating(value_); }

  // "2", "1.5" or "0.5+14.1i".
  std::string to_string() const;

 private:
  PowerParam(Mode mode, Complex value) : mode_(mode), value_(value) {}
  Mode mode_;
  Complex value_;
};

// k^{-s} for integer k >= 1.
Rational exact_inverse_power(std::uint64_t k, int s);
Complex float_inverse_power(std::uint64_t k, Complex s);

// Result of a power sum in whichever arithmetic the PowerParam selected.
class SumValue {
 public:
  SumValue() : value_(Complex{}) {}
  SumValue(Rational q) : value_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  SumValue(Complex z) : value_(z) {}              // NOLINT(google-explicit-constructor)
  SumValue(double d) : value_(Complex{d, 0.0}) {}  // NOLINT(google-explicit-constructor)

  static SumValue zero(Mode mode);
  static SumValue one(Mode mode);

  Mode mode() const noexcept { return is_exact() ? Mode::exact : Mode::floating; }
  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }

  const Rational& rational() const;  // throws DomainError in float mode
  Complex to_complex() const;
  double real() const { return to_complex().real(); }

  SumValue& operator+=(const SumValue& rhs);
  SumValue& operator-=(const SumValue& rhs);
  SumValue& operator*=(const SumValue& rhs);
  SumValue& operator/=(const SumValue& rhs);

  friend SumValue operator+(SumValue a, const SumValue& b) { return a += b; }
  friend SumValue operator-(SumValue a, const SumValue& b) { return a -= b; }
  friend SumValue operator*(SumValue a, const SumValue& b) { return a *= b; }
  friend SumValue operator/(SumValue a, const SumValue& b) { return a /= b; }
  SumValue operator-() const;

  // Exact equality for rationals, bitwise-value equality for floats.
  friend bool operator==(const SumValue& a, const SumValue& b);

  // |value| as a double.
  double magnitude() const;

  // Rationals as "p/q" (or "p"), floats with 15 significant digits.
  std::string to_string() const;

 private:
  std::variant<Rational, Complex> value_;
};

// Fixed 15-significant-digit rendering used by every report.
std::string format_double(double v);
std::string format_complex(Complex z);

}  // namespace oscnum
