#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ropelab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int samples = 0;  // 0 keeps each criterion's own default
  int n_max = 5;
  int g_min = -6;
  std::vector<long long> chars = {0, 2, 3};
};

struct CriterionResult {
  std::string id;  // suite name
  std::string title;
  bool pass = false;
  long long cases = 0;
  std::string detail;
  std::vector<std::string> counterexamples;  // first few failures
  double seconds = 0;
};

CriterionResult check_double_line_h0(const SuiteOptions& o);
CriterionResult check_double_line_obstruction(const SuiteOptions& o);
CriterionResult check_staircase_ropes(const SuiteOptions& o);
CriterionResult check_resolutions(const SuiteOptions& o);
CriterionResult check_identities(const SuiteOptions& o);
CriterionResult check_normal_blocks(const SuiteOptions& o);
CriterionResult check_rao_minimal(const SuiteOptions& o);
CriterionResult check_lower_bound(const SuiteOptions& o);

// double-lines, obstruction, staircase, resolutions, identities,
// normal-blocks, rao, lower-bound
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// "all" runs every suite in order. Unknown names raise ParseError.
std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& o);

// splitmix64 over the seed and the cell coordinates
std::uint64_t cell_seed(std::uint64_t seed, std::initializer_list<long long> coords);

}  // namespace ropelab
