#include <cstdio>
#include <cstdlib>
#include <string>

#include "jackdunkl/suites.hpp"

using namespace jackdunkl;

int main(int argc, char** argv) {
  SuiteOptions opt;
  if (const char* s = std::getenv("JACKDUNKL_SEED")) opt.seed = std::strtoull(s, nullptr, 10);
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  bool all = true;
  for (int id : only.empty() ? desk_criteria() : only) {
    const CriterionResult r = run_criterion(id, opt);
    std::printf("%s\n", summary_line(r).c_str());
    for (std::size_t i = 0; i < r.reports.size() && i < 5; ++i)
      std::printf("    %s\n", to_json(r.reports[i]).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
