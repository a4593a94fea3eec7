#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace infcc {

enum class SuiteSize { kSmall, kFull };

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long checks = 0;
  std::string detail;  // first failure, or a short summary
};

constexpr int kSuiteCount = 10;

/// Runs acceptance suite `id` (1..10). Failures are reported, never thrown.
SuiteResult run_suite(int id, SuiteSize size, std::uint64_t seed = 20240611);
std::vector<SuiteResult> run_all(SuiteSize size, std::uint64_t seed = 20240611);

}  // namespace infcc
