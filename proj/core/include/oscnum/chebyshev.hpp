#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oscnum/report.hpp"
#include "oscnum/sieve.hpp"

namespace oscnum {

// Prefix sums psi(n) = sum_{m <= n} Lambda(m) for n = 0..limit, each
// accumulated with compensation.
class PsiTable {
 public:
  explicit PsiTable(const SieveTable& table) : PsiTable(table, table.limit()) {}
  PsiTable(const SieveTable& table, std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  double at(std::uint64_t n) const;
  double operator()(double x) const;

 private:
  std::uint64_t limit_;
  std::vector<double> prefix_;
};

// Chebyshev psi(floor(x)).
double psi(double x, const SieveTable& table);

// Two reports: "EQ56.1" checks log floor(x)! = sum_k psi(x/k) and "EQ56.5"
// checks psi(x) + log x = sum_k mu(k) floor(x/k) log(x/k). Both are exact
// identities; the tolerance is the float budget kPsiRelTolerance * floor(x).
inline constexpr double kPsiRelTolerance = 1e-8;
std::vector<IdentityReport> verify_psi_convolution(double x, const SieveTable& table);
std::vector<IdentityReport> verify_psi_convolution(double x, const SieveTable& table,
                                                   const PsiTable& psi_table);

struct PsiDecomposition {
  double x = 0.0;
  double psi = 0.0;
  double regular = 0.0;      // x sum mu(k)/k log(x/k)
  double oscillatory = 0.0;  // sum mu(k) {x/k} log(x/k) + log x
  double residual = 0.0;     // |regular - oscillatory - psi|
};

PsiDecomposition psi_decompose(double x, const SieveTable& table);
PsiDecomposition psi_decompose(double x, const SieveTable& table, const PsiTable& psi_table);

// The oscillatory part alone: sum_k mu(k) {x/k} log(x/k) + log x.
double oscillatory_psi_part(double x, const SieveTable& table);

// Imaginary parts of nontrivial zeta zeros, strictly ascending.
struct ZetaZeros {
  std::vector<double> gammas;
  std::string source;  // '#' header lines joined by newlines
};

// Text format: '#' lines are provenance, every other non-blank line holds
// one positive decimal. Throws ParseError naming the offending line.
ZetaZeros parse_zeta_zeros(std::istream& in, const std::string& name = "<stream>");
ZetaZeros load_zeta_zeros(const std::string& path);

// sum over the first pair_count zeros rho = 1/2 + i gamma of
// 2 Re(x^rho / rho), i.e. the zero sum with conjugates paired.
double explicit_formula_sum(double x, const ZetaZeros& zeros, std::size_t pair_count);

struct OscillationPoint {
  double x;
  double lhs;   // zero sum
  double rhs;   // oscillatory psi part
  double diff;  // lhs - rhs
};

struct OscillationComparison {
  std::vector<OscillationPoint> points;  // ascending x
  std::optional<double> rms;             // RMS of diff/sqrt(x); empty grid: none
};

OscillationComparison oscillation_compare(std::span<const double> grid, const ZetaZeros& zeros,
                                          std::size_t pair_count, const SieveTable& table);

// Grid "start:stop:step": start, start+step, ... while <= stop.
std::vector<double> parse_grid(const std::string& spec);

std::string oscillation_csv_header();
std::string to_csv_row(const OscillationPoint& point);
std::string to_json(const OscillationPoint& point);

}  // namespace oscnum
