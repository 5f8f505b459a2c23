#pragma once

#include "glnwalk/exec.hpp"
#include "glnwalk/multipoly.hpp"
#include "glnwalk/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace glnwalk::surface {

// Particle array {X^(n)_i}: level n holds n strictly decreasing positions,
// interlacing X^(n+1)_{i+1} < X^(n)_i <= X^(n+1)_i. Positions are the shifted
// coordinates x_i = lambda_i - i + 1.
struct InterlacedArray {
  std::vector<std::vector<long long>> levels;  // levels[n-1] has n entries
  int num_levels() const { return static_cast<int>(levels.size()); }
};

InterlacedArray densely_packed(int N);  // X^(n)_i = -i+1

// Throws with a diagnostic naming the violated constraint.
void check_interlacing(const InterlacedArray& a);

struct SchedulePoint {
  int level;
  double time;
};
using Schedule = std::vector<SchedulePoint>;

void check_schedule(const Schedule& s, int N);

// Symmetric-polynomial observable of one level's positions.
class Observable {
 public:
  static Observable power_sum(int k);
  static Observable from_poly(const MultiPoly& p);  // in x1..xn

  double eval(const std::vector<long long>& xs) const;
  // bound on |value| when every |position| <= M and the level has n particles
  double abs_bound(double M, int n) const;
  std::string str() const;

 private:
  int power_ = 0;   // > 0: power-sum fast path
  MultiPoly poly_;  // used when power_ == 0
};

// Attempt a rate-1 right jump of particle i (1-based) on level n. Blocked iff
// i >= 2 and X^(n)_i + 1 = X^(n-1)_{i-1}; otherwise the particle moves and a
// push cascade restores interlacing upward at the same index. Returns whether
// the particle moved. This is the single definition of the model's jump rule.
bool attempt_jump(std::vector<std::vector<long long>>& levels, int n, int i);

// One exact continuous-time trajectory (per-particle exponential clocks in a
// min-time queue); returns the requested level's positions at each schedule
// point. paranoid revalidates the full array after every event.
std::vector<std::vector<long long>> run_trajectory(const InterlacedArray& initial,
                                                   const Schedule& schedule, Rng& rng,
                                                   bool paranoid = false);

struct McResult {
  double mean = 0;
  double stderr_ = 0;
  long long replicas = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo mean/standard error of the product over schedule points of the
// observable at the snapshot. Replica r uses the RNG stream (seed, r), so
// serial and parallel execution give bit-identical results.
McResult mc_expectation(const InterlacedArray& initial, const Schedule& schedule,
                        const std::vector<Observable>& observables, long long replicas,
                        std::uint64_t seed, Exec exec = Exec::parallel,
                        bool paranoid = false);

}  // namespace glnwalk::surface
