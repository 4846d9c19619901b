#pragma once

#include <string>
#include <vector>

namespace fishburn::acceptance {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  std::vector<Check> checks;
};

struct Options {
  std::string cli_path;  // used by criterion 12
};

constexpr int kCriteria = 12;

std::string title(int id);
CriterionResult run(int id, const Options& opt = {});

// Exact parts of the limit-law criterion: ZTP moments and exact pmf normalisation.
CriterionResult run_limit_law_exact();
// Embedded OEIS terms against the computed catalogue, with the network disabled.
CriterionResult run_oeis_offline();

// "CRITERION <id>: PASS|FAIL <title> (<seconds> s)" followed by indented checks.
std::string format(const CriterionResult& r, bool verbose);
std::string to_json(const std::vector<CriterionResult>& rs);

}  // namespace fishburn::acceptance
