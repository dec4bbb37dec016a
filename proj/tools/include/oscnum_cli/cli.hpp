#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oscnum/values.hpp"

namespace oscnum::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

// Largest sieve table the tool will allocate (about 13 bytes per entry).
inline constexpr std::uint64_t kMaxTableLimit = 200000000;
// Largest argument for `mertens`; the recurrence table is then ~ x^(2/3).
inline constexpr double kMaxMertensArgument = 1e13;

inline constexpr const char* kZerosEnv = "OSCNUM_ZEROS";

struct RunConfig {
  std::string command;     // "verify", "mertens", ...
  std::string target;      // verify: eq4 ... eq8; expand: harmonic | count
  std::optional<double> limit;
  std::optional<double> x;
  std::optional<std::string> grid;
  std::optional<std::string> s;
  std::optional<Mode> mode;
  std::optional<std::uint64_t> p;
  std::optional<std::string> zeros;
  std::optional<std::size_t> pairs;
  std::string format = "csv";
  std::optional<std::string> out;
  std::optional<std::uint64_t> segment;
  std::optional<std::string> table;
  std::optional<double> tolerance;  // overrides float-mode tolerances
  bool timing = false;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kOk;  // meaningful when config is empty (help or error)
  std::string message;
};

ParseResult parse_command_line(const std::vector<std::string>& args);

// Runs one validated command, writing data rows to `out` and diagnostics to
// `err`. Returns kOk, kViolation or kUsage.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parse, honour --out, dispatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "2", "-1", "1.5" or "re,im". Exact unless the mode says otherwise or the
// value is not an integer in the exact range.
PowerParam parse_power(const std::string& spec, std::optional<Mode> mode);

}  // namespace oscnum::cli
