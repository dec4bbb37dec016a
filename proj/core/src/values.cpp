#include "oscnum/values.hpp"

#include <cmath>
#include <cstdio>

#include "oscnum/errors.hpp"

namespace oscnum {

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw ParseError("unknown mode '" + text + "' (expected exact or float)");
}

PowerParam PowerParam::exact(int s) {
  if (s < kMinExact || s > kMaxExact) {
    throw DomainError("exact mode supports integer s in [" + std::to_string(kMinExact) + ", " +
                      std::to_string(kMaxExact) + "], got " + std::to_string(s));
  }
  return PowerParam(Mode::exact, Complex{static_cast<double>(s), 0.0});
}

PowerParam PowerParam::floating(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("power parameter must be finite");
  }
  return PowerParam(Mode::floating, s);
}

int PowerParam::exact_value() const {
  if (mode_ != Mode::exact) throw DomainError("power parameter is not in exact mode");
  return static_cast<int>(value_.real());
}

std::string PowerParam::to_string() const {
  if (mode_ == Mode::exact) return std::to_string(exact_value());
  if (is_real()) return format_double(value_.real());
  return format_complex(value_);
}

Rational exact_inverse_power(std::uint64_t k, int s) {
  mpz_class base;
  mpz_import(base.get_mpz_t(), 1, 1, sizeof(k), 0, 0, &k);
  if (s >= 0) {
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(s));
    return Rational(mpz_class(1), den);
  }
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(-s));
  return Rational(num);
}

Complex float_inverse_power(std::uint64_t k, Complex s) {
  const double kd = static_cast<double>(k);
  if (s.imag() == 0.0) {
    const double sr = s.real();
    if (sr == 0.0) return 1.0;
    if (sr == 1.0) return 1.0 / kd;
    if (sr == 2.0) return 1.0 / (kd * kd);
    return std::pow(kd, -sr);
  }
  // k >= 1 so the real logarithm has no branch ambiguity.
  return std::exp(-s * std::log(kd));
}

SumValue SumValue::zero(Mode mode) {
  return mode == Mode::exact ? SumValue(Rational(0)) : SumValue(Complex{});
}

SumValue SumValue::one(Mode mode) {
  return mode == Mode::exact ? SumValue(Rational(1)) : SumValue(Complex{1.0, 0.0});
}

const Rational& SumValue::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("value is not exact");
}

Complex SumValue::to_complex() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Complex{q->get_d(), 0.0};
  return std::get<Complex>(value_);
}

SumValue& SumValue::operator+=(const SumValue& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) += rhs.rational();
  } else {
    value_ = to_complex() + rhs.to_complex();
  }
  return *this;
}

SumValue& SumValue::operator-=(const SumValue& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) -= rhs.rational();
  } else {
    value_ = to_complex() - rhs.to_complex();
  }
  return *this;
}

SumValue& SumValue::operator*=(const SumValue& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) *= rhs.rational();
  } else {
    value_ = to_complex() * rhs.to_complex();
  }
  return *this;
}

SumValue& SumValue::operator/=(const SumValue& rhs) {
  if (is_exact() && rhs.is_exact()) {
    if (rhs.rational() == 0) throw DomainError("exact division by zero");
    std::get<Rational>(value_) /= rhs.rational();
  } else {
    value_ = to_complex() / rhs.to_complex();
  }
  return *this;
}

SumValue SumValue::operator-() const {
  if (is_exact()) return SumValue(Rational(-rational()));
  return SumValue(-to_complex());
}

bool operator==(const SumValue& a, const SumValue& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.rational() == b.rational();
  return a.to_complex() == b.to_complex();
}

double SumValue::magnitude() const {
  if (is_exact()) return std::fabs(rational().get_d());
  return std::abs(to_complex());
}

std::string SumValue::to_string() const {
  if (is_exact()) return rational().get_str();
  const Complex z = to_complex();
  return z.imag() == 0.0 ? format_double(z.real()) : format_complex(z);
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  out += (std::signbit(im) && im != 0.0) ? "-" : "+";
  out += format_double(std::fabs(im));
  out += "i";
  return out;
}

}  // namespace oscnum
