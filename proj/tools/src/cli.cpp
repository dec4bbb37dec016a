#include "oscnum_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscnum/chebyshev.hpp"
#include "oscnum/errors.hpp"
#include "oscnum/euler_products.hpp"
#include "oscnum/identities.hpp"
#include "oscnum/mertens.hpp"
#include "oscnum/parallel.hpp"
#include "oscnum/power_sums.hpp"
#include "oscnum/sieve.hpp"
#include "oscnum/sieve_expansion.hpp"

#ifndef OSCNUM_DEFAULT_ZEROS
#define OSCNUM_DEFAULT_ZEROS ""
#endif

namespace oscnum::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct UsageError : Error {
  using Error::Error;
};

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"sieve-build", "Build the Möbius table, optionally caching it with --table"},
    {"mu", "Möbius values"},
    {"mertens", "Mertens function through the floor-quotient recurrence"},
    {"harmonic", "H_x(s) = sum k^-s"},
    {"oscillatory", "M_x(s) = sum mu(k) k^-s"},
    {"verify", "Check one identity at x or over a grid"},
    {"expand", "Sieved-family values H^(q) along the prime expansion"},
    {"ratio", "Sieved ratio H^(p)/H against the Euler partial product"},
    {"euler-product", "prod_{q <= p} (1 - q^-s) against 1/zeta(s)"},
    {"theta", "Truncated M_x(s) against 1/zeta(s)"},
    {"reciprocal", "zeta(s) M_x(s) - 1 with its tail bound"},
    {"psi-decompose", "psi(x) split into regular and oscillatory parts"},
    {"explicit-formula", "Zero sum against the oscillatory part of psi"}};

const std::vector<std::string> kVerifyTargets{"eq4",  "eq9",  "eq38", "eq40", "eq42",
                                              "eq47", "eq50", "eq56", "eq57", "eq8"};

// Flags a command accepts beyond the universal --format/--out/--timing.
std::set<std::string> allowed_flags(const RunConfig& c) {
  const std::string& cmd = c.command;
  const std::string& t = c.target;
  if (cmd == "sieve-build") return {"limit", "segment", "table"};
  if (cmd == "mu") return {"x", "grid", "limit", "segment", "table"};
  if (cmd == "mertens") return {"x", "grid", "limit", "segment"};
  if (cmd == "harmonic") return {"x", "grid", "s", "mode"};
  if (cmd == "oscillatory" || cmd == "theta") return {"x", "grid", "s", "mode", "limit", "segment"};
  if (cmd == "verify") {
    std::set<std::string> flags{"x", "grid", "limit", "segment", "tolerance"};
    if (t == "eq4" || t == "eq38" || t == "eq47") flags.insert({"s", "mode"});
    if (t == "eq40" || t == "eq50") flags.insert("mode");
    if (t == "eq47" || t == "eq50") flags.insert("p");
    return flags;
  }
  if (cmd == "expand") {
    if (t == "count") return {"x", "p", "limit", "segment"};
    return {"x", "s", "mode", "p", "limit", "segment"};
  }
  if (cmd == "ratio") return {"x", "grid", "s", "mode", "p", "limit", "segment", "tolerance"};
  if (cmd == "euler-product") return {"s", "mode", "p", "limit", "segment"};
  if (cmd == "reciprocal") return {"x", "grid", "s", "limit", "segment"};
  if (cmd == "psi-decompose") return {"x", "grid", "limit", "segment", "tolerance"};
  if (cmd == "explicit-formula") return {"x", "grid", "zeros", "pairs", "limit", "segment"};
  return {};
}

std::set<std::string> given_flags(const RunConfig& c) {
  std::set<std::string> g;
  if (c.limit) g.insert("limit");
  if (c.x) g.insert("x");
  if (c.grid) g.insert("grid");
  if (c.s) g.insert("s");
  if (c.mode) g.insert("mode");
  if (c.p) g.insert("p");
  if (c.zeros) g.insert("zeros");
  if (c.pairs) g.insert("pairs");
  if (c.segment) g.insert("segment");
  if (c.table) g.insert("table");
  if (c.tolerance) g.insert("tolerance");
  return g;
}

void validate(const RunConfig& c) {
  const auto allowed = allowed_flags(c);
  for (const auto& flag : given_flags(c)) {
    if (!allowed.count(flag)) {
      throw UsageError("--" + flag + " is not accepted by '" + c.command +
                       (c.target.empty() ? "" : " " + c.target) + "'");
    }
  }
  if (c.x && c.grid) throw UsageError("--x and --grid are mutually exclusive");
  const bool wants_x = allowed.count("x") > 0;
  if (wants_x && !c.x && !c.grid) throw UsageError("'" + c.command + "' needs --x or --grid");
  if (c.x && !(std::isfinite(*c.x) && *c.x > 0)) throw UsageError("--x must be positive");
  if (c.format != "csv" && c.format != "json") {
    throw UsageError("--format must be csv or json, got '" + c.format + "'");
  }
  if (c.limit && !(*c.limit >= 1 && *c.limit == std::floor(*c.limit))) {
    throw UsageError("--limit must be a positive integer");
  }
  if (c.segment && *c.segment == 0) throw UsageError("--segment must be positive");
  if (c.tolerance && !(*c.tolerance >= 0)) throw UsageError("--tolerance must be >= 0");
}

// ---------------------------------------------------------------------------
// Output

class Emitter {
 public:
  explicit Emitter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(const std::vector<std::string>& values) {
    std::string csv;
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) csv += ',';
      csv += values[i];
      j[columns_[i]] = values[i];
    }
    add_raw(std::move(csv), j.dump());
  }
  void add_raw(std::string csv, std::string json) {
    csv_.push_back(std::move(csv));
    json_.push_back(std::move(json));
  }
  void set_summary(std::string key, std::string value) {
    summary_ = std::make_pair(std::move(key), std::move(value));
  }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "csv") {
      std::string header;
      for (std::size_t i = 0; i < columns_.size(); ++i) header += (i ? "," : "") + columns_[i];
      out << header << '\n';
      for (const auto& row : csv_) out << row << '\n';
      if (summary_) out << "# " << summary_->first << '=' << summary_->second << '\n';
      return;
    }
    std::string rows = "[";
    for (std::size_t i = 0; i < json_.size(); ++i) rows += (i ? ",\n " : "\n ") + json_[i];
    rows += json_.empty() ? "]" : "\n]";
    if (summary_) {
      out << "{\"rows\":" << rows << ",\n\"" << summary_->first << "\":\"" << summary_->second
          << "\"}\n";
    } else {
      out << rows << '\n';
    }
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> csv_;
  std::vector<std::string> json_;
  std::optional<std::pair<std::string, std::string>> summary_;
};

std::vector<std::string> split_csv(const std::string& header) {
  std::vector<std::string> out;
  std::stringstream ss(header);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------
// Shared state for one run

struct Context {
  const RunConfig& config;
  std::ostream& err;
  CsvOptions csv;
  std::unique_ptr<SieveTable> table;

  std::vector<double> arguments() const {
    if (config.grid) return parse_grid(*config.grid);
    return {*config.x};
  }

  std::uint64_t max_floor(const std::vector<double>& xs) const {
    double top = 0;
    for (double x : xs) top = std::max(top, x);
    return floor_arg(top);
  }

  // Builds the table once; the cap is checked before any allocation.
  const SieveTable& sieve(std::uint64_t required) {
    required = std::max<std::uint64_t>(required, 1);
    std::uint64_t limit = required;
    if (config.limit) {
      limit = static_cast<std::uint64_t>(*config.limit);
      if (limit < required) {
        throw UsageError("--limit " + std::to_string(limit) + " is below the required " +
                         std::to_string(required));
      }
    }
    if (limit > kMaxTableLimit) {
      throw UsageError("sieve limit " + std::to_string(limit) + " exceeds the cap " +
                       std::to_string(kMaxTableLimit));
    }
    if (!table) {
      table = std::make_unique<SieveTable>(
          SieveTable::build(limit, config.segment.value_or(limit)));
    }
    return *table;
  }

  PowerParam power() const {
    if (!config.s) throw UsageError("'" + config.command + "' needs --s");
    return parse_power(*config.s, config.mode);
  }

  // Exact rationals of a long product grow without bound, so an integer s
  // without an explicit --mode switches to float past kRatioExactLimit.
  PowerParam power_for_cutoff(std::uint64_t cutoff) const {
    const PowerParam s = power();
    if (!config.mode && s.is_exact() && cutoff > kRatioExactLimit) return s.as_floating();
    return s;
  }

  PowerParam fixed_power(int s) const {
    if (config.mode == Mode::floating) return PowerParam::floating(static_cast<double>(s));
    return PowerParam::exact(s);
  }

  std::uint64_t prime() const {
    if (!config.p) throw UsageError("'" + config.command + "' needs --p");
    if (!is_prime_trial(*config.p)) {
      throw UsageError("--p must be prime, got " + std::to_string(*config.p));
    }
    return *config.p;
  }
};

// Evaluates fn at every argument in parallel, keeping the ascending order.
template <typename Row>
std::vector<Row> over_grid(const std::vector<double>& xs, const std::function<Row(double)>& fn) {
  std::vector<Row> rows(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { rows[i] = fn(xs[i]); });
  return rows;
}

int emit_reports(Context& ctx, const std::vector<IdentityReport>& reports, std::ostream& out) {
  Emitter emitter(split_csv(identity_csv_header()));
  bool ok = true;
  for (auto r : reports) {
    if (ctx.config.tolerance) r.tolerance = *ctx.config.tolerance;
    ok &= r.passed();
    emitter.add_raw(to_csv_row(r, ctx.csv), to_json(r, ctx.csv));
  }
  emitter.write(out, ctx.config.format);
  return ok ? kOk : kViolation;
}

int emit_products(Context& ctx, const std::vector<ProductReport>& reports, std::ostream& out) {
  Emitter emitter(split_csv(product_csv_header()));
  bool ok = true;
  for (const auto& r : reports) {
    ok &= r.passed();
    emitter.add_raw(to_csv_row(r), to_json(r));
  }
  emitter.write(out, ctx.config.format);
  return ok ? kOk : kViolation;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_sieve_build(Context& ctx, std::ostream& out) {
  if (!ctx.config.limit) throw UsageError("'sieve-build' needs --limit");
  const auto& table = ctx.sieve(static_cast<std::uint64_t>(*ctx.config.limit));
  if (ctx.config.table) {
    std::ofstream file(*ctx.config.table, std::ios::binary);
    if (!file) throw UsageError("cannot write table file '" + *ctx.config.table + "'");
    write_mobius_dump(table, file);
    if (!file) throw UsageError("failed writing table file '" + *ctx.config.table + "'");
  }
  Emitter emitter({"limit", "primes", "mertens"});
  emitter.add({std::to_string(table.limit()),
               std::to_string(primes_up_to(table.limit(), table).size()),
               std::to_string(table.mertens_prefix(table.limit()))});
  emitter.write(out, ctx.config.format);
  return kOk;
}

int cmd_mu(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  Emitter emitter({"n", "mu"});
  if (ctx.config.table) {
    if (ctx.config.limit || ctx.config.segment) {
      throw UsageError("--table replaces --limit/--segment for 'mu'");
    }
    std::ifstream file(*ctx.config.table, std::ios::binary);
    if (!file) throw UsageError("cannot read table file '" + *ctx.config.table + "'");
    const auto dump = read_mobius_dump(file);
    for (double x : xs) {
      const std::uint64_t n = floor_arg(x);
      if (n == 0 || n > dump.limit) {
        throw UsageError("n = " + std::to_string(n) + " is outside the cached table (1.." +
                         std::to_string(dump.limit) + ")");
      }
      emitter.add({std::to_string(n), std::to_string(dump.mu[n - 1])});
    }
  } else {
    const auto& table = ctx.sieve(ctx.max_floor(xs));
    for (double x : xs) {
      const std::uint64_t n = floor_arg(x);
      if (n == 0) throw UsageError("mu needs n >= 1");
      emitter.add({std::to_string(n), std::to_string(table.mu(n))});
    }
  }
  emitter.write(out, ctx.config.format);
  return kOk;
}

int cmd_mertens(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  const std::uint64_t top = ctx.max_floor(xs);
  for (double x : xs) {
    if (x > kMaxMertensArgument) {
      throw UsageError("mertens argument exceeds the cap " + format_double(kMaxMertensArgument));
    }
  }
  // Any --limit works here; arguments beyond the table go through the memo.
  const auto& table =
      ctx.sieve(ctx.config.limit ? 1 : std::min(top, suggested_mertens_table_limit(top)));
  MertensMemo memo(table);
  const auto values = over_grid<std::int64_t>(xs, [&](double x) { return memo(x); });
  Emitter emitter({"x", "mertens"});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    emitter.add({format_double(xs[i]), std::to_string(values[i])});
  }
  emitter.write(out, ctx.config.format);
  return kOk;
}

int cmd_power_sum(Context& ctx, std::ostream& out, bool oscillatory) {
  const auto xs = ctx.arguments();
  const PowerParam s = ctx.power();
  const SieveTable* table = oscillatory ? &ctx.sieve(ctx.max_floor(xs)) : nullptr;
  const auto values = over_grid<SumValue>(xs, [&](double x) {
    return oscillatory ? oscillatory_power_sum(x, s, *table) : harmonic_power_sum(x, s);
  });
  Emitter emitter({"x", "s", "mode", "value"});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    emitter.add({format_double(xs[i]), s.to_string(), to_string(s.mode()),
                 values[i].to_string()});
  }
  emitter.write(out, ctx.config.format);
  return kOk;
}

IdentityReport psi_reconstruction_report(double x, const SieveTable& table,
                                         const PsiTable& psi_table) {
  const auto t0 = Clock::now();
  const auto d = psi_decompose(x, table, psi_table);
  IdentityReport r;
  r.identity = "EQ57";
  r.x = x;
  r.mode = Mode::floating;
  r.expected = d.psi;
  r.computed = d.regular - d.oscillatory;
  finalize_residual(r);
  r.tolerance = kPsiRelTolerance * static_cast<double>(std::max<std::uint64_t>(floor_arg(x), 1));
  r.elapsed = Clock::now() - t0;
  return r;
}

int cmd_verify(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  const std::string& t = ctx.config.target;
  const auto& table = ctx.sieve(ctx.max_floor(xs));
  std::unique_ptr<PsiTable> psi_table;
  if (t == "eq56" || t == "eq57") psi_table = std::make_unique<PsiTable>(table);

  std::optional<PowerParam> s;
  if (t == "eq4" || t == "eq38" || t == "eq47") s = ctx.power();
  if (t == "eq40") s = ctx.fixed_power(1);
  if (t == "eq50") s = ctx.fixed_power(0);
  std::uint64_t p = 0;
  if (t == "eq47" || t == "eq50") p = ctx.prime();

  const auto per_x = over_grid<std::vector<IdentityReport>>(xs, [&](double x) {
    std::vector<IdentityReport> rs;
    if (t == "eq4") rs.push_back(verify_harmonic_identity(x, *s, table));
    if (t == "eq38" || t == "eq40") rs.push_back(verify_oscillatory_identity(x, *s, table));
    if (t == "eq9") rs.push_back(verify_floor_identity(x, table));
    if (t == "eq42") rs.push_back(verify_mertens_identity(x, table));
    if (t == "eq47" || t == "eq50") rs.push_back(verify_sieved_oscillatory(x, *s, p, table));
    if (t == "eq56") rs = verify_psi_convolution(x, table, *psi_table);
    if (t == "eq57") rs.push_back(psi_reconstruction_report(x, table, *psi_table));
    if (t == "eq8") rs.push_back(log_weighted_mu_residual(x, table));
    if (t == "eq40") rs.back().identity = "EQ40";
    if (t == "eq50") rs.back().identity = "EQ50";
    return rs;
  });
  std::vector<IdentityReport> reports;
  for (const auto& rs : per_x) reports.insert(reports.end(), rs.begin(), rs.end());
  return emit_reports(ctx, reports, out);
}

int cmd_expand(Context& ctx, std::ostream& out) {
  if (ctx.config.grid) throw UsageError("'expand' takes a single --x");
  const double x = *ctx.config.x;
  const PowerParam s = ctx.config.target == "count" ? PowerParam::exact(0) : ctx.power();
  const std::uint64_t p = ctx.prime();
  const std::uint64_t n = floor_arg(x);
  const auto& table = ctx.sieve(std::max(n, p));
  SieveExpansion expansion(s, n, table);
  Emitter emitter(split_csv(expansion_csv_header()));
  for (const auto& e : expansion.entries(x, p)) emitter.add_raw(to_csv_row(e), to_json(e));
  emitter.write(out, ctx.config.format);
  return kOk;
}

int cmd_ratio(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  const PowerParam s = ctx.power();
  const std::uint64_t p = ctx.prime();
  const auto& table = ctx.sieve(std::max(ctx.max_floor(xs), p));
  const auto reports =
      over_grid<IdentityReport>(xs, [&](double x) { return ratio_report(x, s, p, table); });
  return emit_reports(ctx, reports, out);
}

// Reference 1/zeta(s) where the evaluator converges; elsewhere the value is
// reported against 0 with no asserted bound.
void attach_reference(ProductReport& r, double tail) {
  const Complex s = r.s.value();
  if (s.real() >= kZetaMinRe) {
    r.reference = SumValue(1.0 / zeta_eval(s));
    r.tolerance = tail + 1e-12;
  } else {
    r.reference = SumValue(0.0);
    r.tolerance = INFINITY;
  }
  r.residual = std::abs(r.value.to_complex() - r.reference.to_complex());
}

int cmd_euler_product(Context& ctx, std::ostream& out) {
  // Any bound works here, the product runs over the primes up to it.
  if (!ctx.config.p || *ctx.config.p < 2) throw UsageError("'euler-product' needs --p >= 2");
  const std::uint64_t p = *ctx.config.p;
  const PowerParam s = ctx.power_for_cutoff(p);
  const auto& table = ctx.sieve(p);
  ProductReport r;
  r.s = s;
  r.cutoff = p;
  r.value = euler_partial_product(s, p, table);
  // |prod_{q > p} (1 - q^{-s}) - 1| <= expm1(2 sum_{k > p} k^{-sigma}).
  const double sigma = s.value().real();
  const double tail = sigma > 1 ? r.value.magnitude() *
                                      std::expm1(2.0 * std::pow(static_cast<double>(p), 1 - sigma) /
                                                 (sigma - 1))
                                : INFINITY;
  attach_reference(r, tail);
  return emit_products(ctx, {r}, out);
}

int cmd_theta(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  const PowerParam s = ctx.power_for_cutoff(ctx.max_floor(xs));
  const auto& table = ctx.sieve(ctx.max_floor(xs));
  const double sigma = s.value().real();
  const auto reports = over_grid<ProductReport>(xs, [&](double x) {
    ProductReport r;
    r.s = s;
    r.cutoff = floor_arg(x);
    r.value = theta_truncated(s, x, table);
    const double n = static_cast<double>(std::max<std::uint64_t>(r.cutoff, 1));
    attach_reference(r, sigma > 1 ? std::pow(n, 1 - sigma) / (sigma - 1) : INFINITY);
    return r;
  });
  return emit_products(ctx, reports, out);
}

int cmd_reciprocal(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  const PowerParam s = ctx.power();
  if (!s.is_real()) throw UsageError("'reciprocal' needs a real --s");
  const auto& table = ctx.sieve(ctx.max_floor(xs));
  const auto reports = over_grid<ProductReport>(
      xs, [&](double x) { return verify_reciprocal(s.real(), x, table); });
  return emit_products(ctx, reports, out);
}

int cmd_psi_decompose(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  const auto& table = ctx.sieve(ctx.max_floor(xs));
  const PsiTable psi_table(table);
  const auto rows = over_grid<PsiDecomposition>(
      xs, [&](double x) { return psi_decompose(x, table, psi_table); });
  Emitter emitter({"x", "psi", "regular", "oscillatory", "residual"});
  bool ok = true;
  for (const auto& d : rows) {
    const double tol = ctx.config.tolerance.value_or(
        kPsiRelTolerance * static_cast<double>(std::max<std::uint64_t>(floor_arg(d.x), 1)));
    ok &= d.residual <= tol;
    emitter.add({format_double(d.x), format_double(d.psi), format_double(d.regular),
                 format_double(d.oscillatory), format_double(d.residual)});
  }
  emitter.write(out, ctx.config.format);
  return ok ? kOk : kViolation;
}

std::string zeros_path(const RunConfig& c) {
  if (c.zeros) return *c.zeros;
  if (const char* env = std::getenv(kZerosEnv); env && *env) return env;
  const std::string fallback = OSCNUM_DEFAULT_ZEROS;
  if (!fallback.empty() && std::ifstream(fallback).good()) return fallback;
  throw UsageError(std::string("no zeros file: pass --zeros or set ") + kZerosEnv);
}

int cmd_explicit_formula(Context& ctx, std::ostream& out) {
  const auto xs = ctx.arguments();
  ZetaZeros zeros;
  try {
    zeros = load_zeta_zeros(zeros_path(ctx.config));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const std::size_t pairs = ctx.config.pairs.value_or(std::min<std::size_t>(100, zeros.gammas.size()));
  const auto& table = ctx.sieve(ctx.max_floor(xs));
  const auto cmp = oscillation_compare(xs, zeros, pairs, table);
  Emitter emitter(split_csv(oscillation_csv_header()));
  for (const auto& p : cmp.points) emitter.add_raw(to_csv_row(p), to_json(p));
  emitter.set_summary("rms", cmp.rms ? format_double(*cmp.rms) : "undefined");
  emitter.write(out, ctx.config.format);
  return kOk;
}

}  // namespace

PowerParam parse_power(const std::string& spec, std::optional<Mode> mode) {
  const auto comma = spec.find(',');
  auto number = [&](const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
      throw ParseError("--s must be a number or re,im, got '" + spec + "'");
    }
    return v;
  };
  const double re = number(spec.substr(0, comma));
  const double im = comma == std::string::npos ? 0.0 : number(spec.substr(comma + 1));
  const bool integral = im == 0.0 && re == std::floor(re) && re >= PowerParam::kMinExact &&
                        re <= PowerParam::kMaxExact;
  if (mode == Mode::exact) {
    if (!integral) {
      throw DomainError("exact mode needs an integer s in [" +
                        std::to_string(PowerParam::kMinExact) + ", " +
                        std::to_string(PowerParam::kMaxExact) + "], got '" + spec + "'");
    }
    return PowerParam::exact(static_cast<int>(re));
  }
  if (!mode && integral) return PowerParam::exact(static_cast<int>(re));
  return PowerParam::floating(Complex{re, im});
}

ParseResult parse_command_line(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Exact and floating checks of Möbius-inversion identities", "oscnum"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode_text;
  app.add_option("--limit", c.limit, "Sieve table size (default: what the command needs)");
  app.add_option("--x", c.x, "Argument x");
  app.add_option("--grid", c.grid, "Argument grid start:stop:step");
  app.add_option("--s", c.s, "Exponent: integer, real, or re,im");
  app.add_option("--mode", mode_text, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--p", c.p, "Sieve prime");
  app.add_option("--zeros", c.zeros, std::string("Zeta zeros file (default: $") + kZerosEnv + ")");
  app.add_option("--pairs", c.pairs, "Number of zero pairs");
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out, "Output file (default: standard output)");
  app.add_option("--segment", c.segment, "Segment size for the sieve build");
  app.add_option("--table", c.table, "Möbius table file (written by sieve-build, read by mu)");
  app.add_option("--tolerance", c.tolerance, "Override the declared float tolerance");
  app.add_flag("--timing", c.timing, "Fill elapsed_ms in identity rows");

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : kCommands) subs[name] = app.add_subcommand(name, help);
  subs["verify"]
      ->add_option("identity", c.target, "Identity to check")
      ->required()
      ->check(CLI::IsMember(kVerifyTargets));
  subs["expand"]
      ->add_option("family", c.target, "harmonic or count")
      ->required()
      ->check(CLI::IsMember({"harmonic", "count"}));

  std::vector<const char*> argv{"oscnum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  ParseResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    result.exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
    result.message = out.str() + err.str();
    return result;
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) c.command = name;
  }
  if (!mode_text.empty()) c.mode = parse_mode(mode_text);
  result.config = std::move(c);
  return result;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto t0 = Clock::now();
  int status = kUsage;
  try {
    validate(config);
    Context ctx{config, err, CsvOptions{config.timing}, nullptr};
    const std::string& c = config.command;
    if (c == "sieve-build") status = cmd_sieve_build(ctx, out);
    else if (c == "mu") status = cmd_mu(ctx, out);
    else if (c == "mertens") status = cmd_mertens(ctx, out);
    else if (c == "harmonic") status = cmd_power_sum(ctx, out, false);
    else if (c == "oscillatory") status = cmd_power_sum(ctx, out, true);
    else if (c == "verify") status = cmd_verify(ctx, out);
    else if (c == "expand") status = cmd_expand(ctx, out);
    else if (c == "ratio") status = cmd_ratio(ctx, out);
    else if (c == "euler-product") status = cmd_euler_product(ctx, out);
    else if (c == "theta") status = cmd_theta(ctx, out);
    else if (c == "reciprocal") status = cmd_reciprocal(ctx, out);
    else if (c == "psi-decompose") status = cmd_psi_decompose(ctx, out);
    else if (c == "explicit-formula") status = cmd_explicit_formula(ctx, out);
    else throw UsageError("unknown command '" + c + "'");
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out.flush();
  const Milliseconds elapsed = Clock::now() - t0;
  err << "elapsed_ms=" << format_double(elapsed.count()) << '\n';
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command_line(args);
  if (!parsed.config) {
    (parsed.exit_code == kOk ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  if (!parsed.config->out) return dispatch(*parsed.config, out, err);
  std::ofstream file(*parsed.config->out);
  if (!file) {
    err << "error: cannot open output file '" << *parsed.config->out << "'\n";
    return kUsage;
  }
  const int status = dispatch(*parsed.config, file, err);
  file.close();
  if (!file) {
    err << "error: failed writing '" << *parsed.config->out << "'\n";
    return kUsage;
  }
  return status;
}

}  // namespace oscnum::cli
