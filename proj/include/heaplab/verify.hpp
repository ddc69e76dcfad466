#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heaplab {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double worst = 0.0;  // tightest observed margin (meaning depends on the check)
  std::string detail;
};

/// Named invariant suites behind `verify`. Suites: costs, leftist, lemma2,
/// theorem1, section3, convex, wk, golden, reachability, all. scale = 0
/// picks each suite's default. Unknown suite names throw
/// std::invalid_argument (the CLI maps that to a usage error).
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t scale,
                                   std::uint64_t seed);

/// All suite names, in canonical order (excluding "all").
const std::vector<std::string>& suite_names();

}  // namespace heaplab
