#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace glnwalk::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240801;

struct CriterionReport {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  bool full = true;  // full Monte Carlo replica counts; quick shrinks them
  std::uint64_t seed = kDefaultSeed;
};

// Runs the twelve cross-check criteria (symbolic vs oracle vs simulation vs
// covariance); prints one line per criterion to `progress` when given.
std::vector<CriterionReport> run_suite(const SuiteOptions& opts,
                                       std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionReport>& reports);

}  // namespace glnwalk::verify
