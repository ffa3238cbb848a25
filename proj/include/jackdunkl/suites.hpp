#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jackdunkl/report.hpp"

namespace jackdunkl {

struct SuiteOptions {
  std::uint64_t seed = 1;
  bool keep_passing = false;  // retain reports of passing checks too
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  int checks = 0;
  int failures = 0;
  double seconds = 0.0;
  std::string error;  // set when the criterion aborted with an exception
  std::vector<VerificationReport> reports;

  void record(VerificationReport r, bool keep_passing);
};

/// Criteria of the desk suite, numbered 1..9.
std::vector<int> desk_criteria();
std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions& opt = {});
std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& opt = {},
                                       const std::vector<int>& only = {});

/// One line per criterion, e.g. "[PASS] 4 master quadrature (252 checks, 1.9 s)".
std::string summary_line(const CriterionResult& r);
std::string suite_json(const std::string& name, const std::vector<CriterionResult>& results, bool with_timing,
                       int indent = 1);

}  // namespace jackdunkl
