#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace valtree {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long cases = 0;
  std::string detail;
  double seconds = 0;
};

/// Runs the numbered acceptance corpora (all of 1..10 when `which` is empty).
std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::vector<int>& which = {});

}  // namespace valtree
