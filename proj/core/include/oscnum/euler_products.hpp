#pragma once

#include <cstdint>
#include <vector>

#include "oscnum/report.hpp"
#include "oscnum/sieve.hpp"
#include "oscnum/values.hpp"

namespace oscnum {

// prod_{q prime <= p_max} (1 - q^{-s}). Requires p_max <= table.limit().
SumValue euler_partial_product(const PowerParam& s, std::uint64_t p_max, const SieveTable& table);

// Riemann zeta for Re s >= kZetaMinRe: direct sum of kZetaTerms - 1 terms,
// then the Euler-Maclaurin tail N^{1-s}/(s-1) + N^{-s}/2 and four Bernoulli
// corrections. The first omitted correction is below |s|^9 N^{-Re s-9}/10^6,
// negligible next to rounding for N = 10^4.
inline constexpr double kZetaMinRe = 1.1;
inline constexpr std::uint64_t kZetaTerms = 10000;
Complex zeta_eval(Complex s);

// M_x(s) = sum_{k <= x} mu(k) k^{-s}, the truncation of 1/zeta(s).
SumValue theta_truncated(const PowerParam& s, double x, const SieveTable& table);

// |zeta(s) * M_x(s) - 1| with the bound zeta(s) * floor(x)^{1-s}/(s-1) on
// the truncated tail. Real s >= kReciprocalMinS.
inline constexpr double kReciprocalMinS = 1.5;
ProductReport verify_reciprocal(double s, double x, const SieveTable& table);

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), the factor with
// zeta(s) = chi(s) zeta(1-s). Removable singularities (even s >= 2) are
// evaluated through the reflected form 2^{s-1} pi^s / (cos(pi s/2) Gamma(s)).
// Throws DomainError at poles (odd s >= 1) or on overflow.
Complex functional_factor(Complex s);

// 1/chi(s), the factor relating M_inf(s) and M_inf(1-s).
Complex theta_functional_factor(Complex s);

// sum of k^{-s} over k <= bound whose prime factors are all <= p_max.
double smooth_power_sum(double s, std::uint64_t p_max, std::uint64_t bound,
                        const SieveTable& table);

// max |m_x| over integers x in [10^j, 10^{j+1}) for j = 1..decades-1, and
// |m_x| at x = 10^decades as the last entry.
std::vector<double> m_decade_maxima(int decades, const SieveTable& table);

}  // namespace oscnum
