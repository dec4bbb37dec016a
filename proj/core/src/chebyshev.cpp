#include "oscnum/chebyshev.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "oscnum/errors.hpp"
#include "oscnum/int_math.hpp"
#include "oscnum/parallel.hpp"
#include "oscnum/summation.hpp"

namespace oscnum {

namespace {

using Clock = std::chrono::steady_clock;

void require_table(std::uint64_t n, std::uint64_t limit) {
  if (n > limit) {
    throw RangeError("argument " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(limit));
  }
}

IdentityReport float_report(std::string id, double x, double expected, double computed,
                            double tolerance, Clock::time_point t0) {
  IdentityReport r;
  r.identity = std::move(id);
  r.x = x;
  r.mode = Mode::floating;
  r.expected = expected;
  r.computed = computed;
  r.tolerance = tolerance;
  finalize_residual(r);
  r.elapsed = Clock::now() - t0;
  return r;
}

}  // namespace

PsiTable::PsiTable(const SieveTable& table, std::uint64_t limit) : limit_(limit) {
  require_table(limit, table.limit());
  prefix_.resize(limit + 1, 0.0);
  CompensatedSum acc;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const double lambda = table.von_mangoldt(n);
    if (lambda != 0.0) acc += lambda;
    prefix_[n] = acc.value();
  }
}

double PsiTable::at(std::uint64_t n) const {
  require_table(n, limit_);
  return prefix_[n];
}

double PsiTable::operator()(double x) const { return at(floor_arg(x)); }

double psi(double x, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  require_table(n, table.limit());
  CompensatedSum acc;
  for (std::uint64_t m = 2; m <= n; ++m) {
    const double lambda = table.von_mangoldt(m);
    if (lambda != 0.0) acc += lambda;
  }
  return acc.value();
}

std::vector<IdentityReport> verify_psi_convolution(double x, const SieveTable& table) {
  const PsiTable psi_table(table, floor_arg(x));
  return verify_psi_convolution(x, table, psi_table);
}

std::vector<IdentityReport> verify_psi_convolution(double x, const SieveTable& table,
                                                   const PsiTable& psi_table) {
  const std::uint64_t n = floor_arg(x);
  require_table(n, table.limit());
  require_table(n, psi_table.limit());
  const double tolerance = kPsiRelTolerance * static_cast<double>(std::max<std::uint64_t>(n, 1));
  std::vector<IdentityReport> out;

  auto t0 = Clock::now();
  CompensatedSum log_factorial;
  CompensatedSum psi_sum;
  for (std::uint64_t k = 1; k <= n; ++k) {
    log_factorial += std::log(static_cast<double>(k));
    psi_sum += psi_table.at(n / k);
  }
  out.push_back(float_report("EQ56.1", x, log_factorial.value(), psi_sum.value(), tolerance, t0));

  t0 = Clock::now();
  const auto mu = table.mu_values();
  CompensatedSum weighted;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;
    const double kd = static_cast<double>(k);
    weighted += mu[k] * static_cast<double>(n / k) * std::log(x / kd);
  }
  const double lhs = n == 0 ? 0.0 : psi_table.at(n) + std::log(x);
  out.push_back(float_report("EQ56.5", x, lhs, n == 0 ? 0.0 : weighted.value(), tolerance, t0));
  return out;
}

namespace {

PsiDecomposition decompose_with(double x, double psi_value, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  require_table(n, table.limit());
  PsiDecomposition d;
  d.x = x;
  d.psi = psi_value;
  const auto mu = table.mu_values();
  CompensatedSum regular;
  CompensatedSum oscillatory;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;
    const double kd = static_cast<double>(k);
    const double q = x / kd;
    const double log_q = std::log(q);
    regular += mu[k] * log_q / kd;
    oscillatory += mu[k] * (q - std::floor(q)) * log_q;
  }
  if (n >= 1) oscillatory += std::log(x);
  d.regular = x * regular.value();
  d.oscillatory = oscillatory.value();
  d.residual = std::fabs(d.regular - d.oscillatory - d.psi);
  return d;
}

}  // namespace

PsiDecomposition psi_decompose(double x, const SieveTable& table) {
  return decompose_with(x, psi(x, table), table);
}

PsiDecomposition psi_decompose(double x, const SieveTable& table, const PsiTable& psi_table) {
  return decompose_with(x, psi_table(x), table);
}

double oscillatory_psi_part(double x, const SieveTable& table) {
  const std::uint64_t n = floor_arg(x);
  require_table(n, table.limit());
  const auto mu = table.mu_values();
  CompensatedSum acc;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (mu[k] == 0) continue;
    const double q = x / static_cast<double>(k);
    acc += mu[k] * (q - std::floor(q)) * std::log(q);
  }
  if (n >= 1) acc += std::log(x);
  return acc.value();
}

ZetaZeros parse_zeta_zeros(std::istream& in, const std::string& name) {
  ZetaZeros zeros;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto body = line.find_first_not_of(" \t", first + 1);
      if (!zeros.source.empty()) zeros.source += '\n';
      if (body != std::string::npos) zeros.source += line.substr(body);
      continue;
    }
    const auto last = line.find_last_not_of(" \t");
    const std::string token = line.substr(first, last - first + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(value) || value <= 0.0) {
      throw ParseError(name + ":" + std::to_string(line_no) + ": malformed zero '" + token + "'");
    }
    if (!zeros.gammas.empty() && value <= zeros.gammas.back()) {
      throw ParseError(name + ":" + std::to_string(line_no) + ": zeros not strictly ascending (" +
                       token + " after " + format_double(zeros.gammas.back()) + ")");
    }
    zeros.gammas.push_back(value);
  }
  if (zeros.gammas.empty()) throw ParseError(name + ": no zeros");
  if (!(zeros.gammas.front() > 14.0 && zeros.gammas.front() < 14.3)) {
    throw ParseError(name + ": first zero " + format_double(zeros.gammas.front()) +
                     " outside (14.0, 14.3); wrong file?");
  }
  return zeros;
}

ZetaZeros load_zeta_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zeros file '" + path + "'");
  return parse_zeta_zeros(in, path);
}

double explicit_formula_sum(double x, const ZetaZeros& zeros, std::size_t pair_count) {
  if (pair_count > zeros.gammas.size()) {
    throw RangeError("requested " + std::to_string(pair_count) + " zero pairs but only " +
                     std::to_string(zeros.gammas.size()) + " are loaded");
  }
  if (pair_count == 0) return 0.0;
  if (!(x > 1.0)) throw DomainError("explicit formula sum needs x > 1");
  const double log_x = std::log(x);
  const double sqrt_x = std::sqrt(x);
  CompensatedSum acc;
  for (std::size_t i = 0; i < pair_count; ++i) {
    const Complex rho{0.5, zeros.gammas[i]};
    const Complex phase = std::polar(1.0, zeros.gammas[i] * log_x);
    acc += 2.0 * sqrt_x * (phase / rho).real();
  }
  return acc.value();
}

OscillationComparison oscillation_compare(std::span<const double> grid, const ZetaZeros& zeros,
                                          std::size_t pair_count, const SieveTable& table) {
  OscillationComparison out;
  std::vector<double> xs(grid.begin(), grid.end());
  std::sort(xs.begin(), xs.end());
  out.points.resize(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const double lhs = explicit_formula_sum(x, zeros, pair_count);
    const double rhs = oscillatory_psi_part(x, table);
    out.points[i] = OscillationPoint{x, lhs, rhs, lhs - rhs};
  });
  if (!out.points.empty()) {
    CompensatedSum squares;
    for (const auto& p : out.points) {
      const double scaled = p.diff / std::sqrt(p.x);
      squares += scaled * scaled;
    }
    out.rms = std::sqrt(squares.value() / static_cast<double>(out.points.size()));
  }
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c2 == std::string::npos || spec.find(':', c2 + 1) != std::string::npos) {
    throw ParseError("grid must be start:stop:step, got '" + spec + "'");
  }
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  try {
    std::size_t used = 0;
    const std::string a = spec.substr(0, c1);
    const std::string b = spec.substr(c1 + 1, c2 - c1 - 1);
    const std::string c = spec.substr(c2 + 1);
    start = std::stod(a, &used);
    if (used != a.size()) throw ParseError("");
    stop = std::stod(b, &used);
    if (used != b.size()) throw ParseError("");
    step = std::stod(c, &used);
    if (used != c.size()) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("grid must be start:stop:step with numeric fields, got '" + spec + "'");
  }
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw ParseError("grid step must be positive, got '" + spec + "'");
  }
  std::vector<double> out;
  const double slack = step * 1e-9;
  for (std::size_t i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + slack) break;
    out.push_back(v);
  }
  return out;
}

std::string oscillation_csv_header() { return "x,lhs,rhs,diff"; }

std::string to_csv_row(const OscillationPoint& p) {
  return format_double(p.x) + ',' + format_double(p.lhs) + ',' + format_double(p.rhs) + ',' +
         format_double(p.diff);
}

std::string to_json(const OscillationPoint& p) {
  nlohmann::ordered_json j;
  j["x"] = format_double(p.x);
  j["lhs"] = format_double(p.lhs);
  j["rhs"] = format_double(p.rhs);
  j["diff"] = format_double(p.diff);
  return j.dump();
}

}  // namespace oscnum
