#pragma once

#include "oscnum/values.hpp"

namespace oscnum {

// Complex Gamma by the Lanczos approximation (g = 7, 9 terms) with
// reflection for Re z < 1/2. Relative accuracy about 1e-15 away from poles.
Complex gamma(Complex z);

// 1/Gamma(z), entire; exactly 0 at the non-positive integers.
Complex reciprocal_gamma(Complex z);

}  // namespace oscnum
