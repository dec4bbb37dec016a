#include "oscnum/report.hpp"

#include <cmath>

#include <json.hpp>

namespace oscnum {

namespace {

std::string s_field(const std::optional<PowerParam>& s) { return s ? s->to_string() : ""; }

std::string residual_field(const IdentityReport& r) {
  if (r.exact_residual) return r.exact_residual->get_str();
  return format_double(r.residual);
}

}  // namespace

bool IdentityReport::passed() const {
  if (exact_residual && requires_exact_zero) return *exact_residual == 0;
  return std::isfinite(residual) && residual <= tolerance;
}

void finalize_residual(IdentityReport& report) {
  if (report.expected.is_exact() && report.computed.is_exact()) {
    Rational diff = report.computed.rational() - report.expected.rational();
    report.exact_residual = abs(diff);
    report.residual = report.exact_residual->get_d();
  } else {
    report.exact_residual.reset();
    report.residual = std::abs(report.computed.to_complex() - report.expected.to_complex());
  }
}

std::string identity_csv_header() {
  return "identity,x,s,mode,expected,computed,residual,elapsed_ms";
}

std::string to_csv_row(const IdentityReport& r, const CsvOptions& options) {
  std::string row;
  row += r.identity;
  row += ',' + format_double(r.x);
  row += ',' + s_field(r.s);
  row += ',' + to_string(r.mode);
  row += ',' + r.expected.to_string();
  row += ',' + r.computed.to_string();
  row += ',' + residual_field(r);
  row += ',';
  if (options.include_timing) row += format_double(r.elapsed.count());
  return row;
}

std::string to_json(const IdentityReport& r, const CsvOptions& options) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["x"] = format_double(r.x);
  j["s"] = s_field(r.s);
  j["mode"] = to_string(r.mode);
  j["expected"] = r.expected.to_string();
  j["computed"] = r.computed.to_string();
  j["residual"] = residual_field(r);
  if (options.include_timing) {
    j["elapsed_ms"] = format_double(r.elapsed.count());
  } else {
    j["elapsed_ms"] = nullptr;
  }
  return j.dump();
}

std::string product_csv_header() { return "s,cutoff,value,reference,residual,tolerance"; }

std::string to_csv_row(const ProductReport& r) {
  return r.s.to_string() + ',' + std::to_string(r.cutoff) + ',' + r.value.to_string() + ',' +
         r.reference.to_string() + ',' + format_double(r.residual) + ',' +
         format_double(r.tolerance);
}

std::string to_json(const ProductReport& r) {
  nlohmann::ordered_json j;
  j["s"] = r.s.to_string();
  j["cutoff"] = std::to_string(r.cutoff);
  j["value"] = r.value.to_string();
  j["reference"] = r.reference.to_string();
  j["residual"] = format_double(r.residual);
  j["tolerance"] = format_double(r.tolerance);
  return j.dump();
}

}  // namespace oscnum
