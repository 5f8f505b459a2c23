#pragma once

#include "glnwalk/surface.hpp"
#include "glnwalk/ugln.hpp"

namespace glnwalk::oracle {

// m-th Bell polynomial via the Stirling-number recurrence (independent of the
// set-partition state code).
MultiPoly bell_polynomial(int m, Symbol t);

// The state of a monomial by the differentiation formula: expand
// Tr(prod_b (Id + x_b E_{i_b j_b}) - Id) with real matrix arithmetic, take the
// truncated exponential series of t*Y in the multilinear quotient, and read
// off the x_1..x_m coefficient. Exact; agrees with ugln::state.
MultiPoly state_diff_oracle(const ugln::Word& w, Symbol t, int degree_cap = 8);

struct DetFormQuery {
  long long x = 0, y = 0;  // x >= y
  Rational t;
  int k = 1;
  long long b_max = 0;  // >= x
};

struct DetFormResult {
  double value = 0;
  Rational exact;  // ratio of the two truncated sums, exact
};

// The printed N=2 determinantal formula: ratio of double sums over
// b = x..b_max, a = y..b with weight (b-a+1) t^{b+a} det[...], observable
// b^k + (a-1)^k. Matrix entries are reciprocal factorials with 1/n! = 0 for
// n < 0; the printed "(a-y)^{-1}" entry is read as (a-y)!^{-1}.
DetFormResult detform_n2(const DetFormQuery& q);

struct CtmcResult {
  double value = 0;
  double error_bound = 0;  // rigorous truncation bound (Poisson tails)
};

// Exact finite-horizon expectation for small systems by uniformization:
// the distribution is propagated through the truncated series of the
// uniformized transition kernel; the discarded Poisson tail times a bound on
// the remaining observable product gives the error bound. Positions reachable
// in K events stay within [initial, initial + K], so the state space needs no
// separate cap.
CtmcResult ctmc_expectation(const surface::InterlacedArray& initial,
                            const surface::Schedule& schedule,
                            const std::vector<surface::Observable>& observables,
                            double tail_eps = 1e-9, int max_steps_per_epoch = 512);

}  // namespace glnwalk::oracle
