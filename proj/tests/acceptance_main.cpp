// Acceptance suite: runs every criterion at the stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.
#include "glnwalk/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  glnwalk::verify::SuiteOptions opts;
  opts.full = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) opts.full = false;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  auto reports = glnwalk::verify::run_suite(opts, &std::cout);
  return glnwalk::verify::all_passed(reports) ? 0 : 1;
}
