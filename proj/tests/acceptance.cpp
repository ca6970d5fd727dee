// One line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "qws/repro.hpp"

int main() {
  qws::AnalysisConfig cfg;
  cfg.apply_environment();
  int failed = 0;
  qws::run_repro(cfg, [&](const qws::CheckResult& r) {
    std::cout << qws::format_check(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (qws::kCheckCount - failed) << "/" << qws::kCheckCount << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
