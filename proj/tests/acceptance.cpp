#include <chrono>
#include <iostream>

#include "infcc/verify.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (int id = 1; id <= infcc::kSuiteCount; ++id) {
    const auto r = infcc::run_suite(id, infcc::SuiteSize::kFull);
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  (" << r.detail << ")\n";
    if (!r.passed) ++failed;
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (infcc::kSuiteCount - failed) << "/" << infcc::kSuiteCount << " criteria passed in " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
