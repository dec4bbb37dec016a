#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "oscnum/values.hpp"

namespace oscnum {

using Milliseconds = std::chrono::duration<double, std::milli>;

// Outcome of checking one identity at one (x, s).
struct IdentityReport {
  std::string identity;           // "EQ4", "EQ42", ...
  double x = 0.0;
  std::optional<PowerParam> s;    // absent for identities without a power
  Mode mode = Mode::floating;
  SumValue expected;
  SumValue computed;
  double residual = 0.0;                  // |computed - expected|
  std::optional<Rational> exact_residual; // exact mode only
  double tolerance = 0.0;                 // declared bound on residual
  // Exact identities must have a zero exact residual; exact-mode limit
  // comparisons clear this and are judged against `tolerance`.
  bool requires_exact_zero = true;
  Milliseconds elapsed{0.0};

  // Exact reports pass only on a zero exact residual.
  bool passed() const;
};

// Fills residual / exact_residual from expected and computed.
void finalize_residual(IdentityReport& report);

struct CsvOptions {
  // Timing varies run to run, so data rows leave elapsed_ms empty unless
  // asked.
  bool include_timing = false;
};

std::string identity_csv_header();
std::string to_csv_row(const IdentityReport& report, const CsvOptions& options = {});
std::string to_json(const IdentityReport& report, const CsvOptions& options = {});

// Partial Euler product / truncated series compared with a reference value.
struct ProductReport {
  PowerParam s = PowerParam::floating(2.0);
  std::uint64_t cutoff = 0;
  SumValue value;
  SumValue reference;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return residual <= tolerance; }
};

std::string product_csv_header();
std::string to_csv_row(const ProductReport& report);
std::string to_json(const ProductReport& report);

}  // namespace oscnum
