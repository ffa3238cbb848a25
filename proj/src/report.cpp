#include "jackdunkl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace jackdunkl {

double rel_error(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {
nlohmann::ordered_json cjson(std::complex<double> z) {
  nlohmann::ordered_json j;
  j["re"] = std::stod(format_double(z.real()));
  j["im"] = std::stod(format_double(z.imag()));
  return j;
}
}  // namespace

std::string to_json(const VerificationReport& r, bool with_timing, int indent) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = p;
  j["lhs"] = cjson(r.lhs);
  j["rhs"] = cjson(r.rhs);
  j["relError"] = std::stod(format_double(r.relError));
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["quadratureError"] = std::stod(format_double(r.quadratureError));
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_timing) j["runtimeMs"] = std::round(r.runtimeMs * 1000.0) / 1000.0;
  return j.dump(indent);
}

}  // namespace jackdunkl
