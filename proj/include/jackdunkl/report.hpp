#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace jackdunkl {

/// Structured result of a single identity check.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  std::complex<double> lhs{0.0, 0.0};
  std::complex<double> rhs{0.0, 0.0};
  double relError = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtimeMs = 0.0;
  double quadratureError = 0.0;
  std::string detail;

  void finish() { pass = relError <= tolerance; }
  void add(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
};

double rel_error(std::complex<double> a, std::complex<double> b);

/// JSON object; runtime is included only when requested so that output stays
/// byte-reproducible.
std::string to_json(const VerificationReport& r, bool with_timing = false, int indent = -1);
std::string format_double(double v);

}  // namespace jackdunkl
