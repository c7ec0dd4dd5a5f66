#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dedesym {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Named groups of acceptance criteria: classical, cocycle, hecke, equidist, all.
std::vector<std::string> suite_names();

/// Runs the criteria of `suite`; `on_result` sees each result as it completes.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CriterionResult> run_suite(std::string_view suite,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// One line per criterion: `[PASS] 3 eta oracle ... (detail)`.
std::string format_result(const CriterionResult& r);

}  // namespace dedesym
