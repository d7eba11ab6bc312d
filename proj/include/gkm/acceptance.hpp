#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gkm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool blocking = true;  // a failing stretch criterion is only a warning
  double seconds = 0;
  std::vector<std::string> details;
};

struct AcceptanceOptions {
  std::vector<int> only;  // empty: all twelve
  std::uint64_t seed = 20240611;
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
// "[PASS] 6 holes N=23 (0.4 s)"; failing stretch criteria print WARN
std::string format_line(const CriterionResult& r);
bool all_blocking_pass(const std::vector<CriterionResult>& rs);

}  // namespace gkm
