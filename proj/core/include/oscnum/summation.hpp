#pragma once

#include <cmath>
#include <complex>

namespace oscnum {

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& operator+=(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator-=(double v) { return *this += -v; }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  CompensatedComplexSum& operator+=(std::complex<double> v) {
    re_ += v.real();
    im_ += v.imag();
    return *this;
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace oscnum
