#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qws/graph.hpp"
#include "qws/report.hpp"

namespace qws {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCheckCount = 14;

// Small named graphs shared by the property checks.
std::vector<Graph> corpus_graphs();

// One acceptance check, 1 <= id <= 14. Throws InvalidArgument for other ids.
CheckResult run_check(int id, const AnalysisConfig& cfg);
// All checks in order; `progress` sees each result as it completes.
std::vector<CheckResult> run_repro(const AnalysisConfig& cfg,
                                   const std::function<void(const CheckResult&)>& progress = {});

std::string format_check(const CheckResult& r);
Json repro_json(const std::vector<CheckResult>& results);

}  // namespace qws
