#pragma once

#include "glnwalk/laurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace glnwalk::cov {

// Observation point of the rescaled field: level ~ eta L, time ~ tau L,
// moment index k.
struct PathPoint {
  Rational eta, tau;
  int k = 1;
};

void validate(const PathPoint& p);

// Exact value of the double contour integral with kernel (z-w)^{-2} on
// |z| > |w|: sum_{r>=1} r F[z^r] G[w^{-r}].
MultiPoly residue_pair(const LaurentPoly& F, const LaurentPoly& G);

// (eta var^{-1} + tau + tau var)^k
LaurentPoly moment_factor(Symbol var, const MultiPoly& eta, const MultiPoly& tau, int k);

enum class Branch { spacelike, timelike };

// Space-like branch: eta_i >= eta_j, tau_i <= tau_j.
Rational cov_spacelike(const PathPoint& i, const PathPoint& j);
// Time-like branch: eta_i < eta_j, tau_i <= tau_j.
Rational cov_timelike(const PathPoint& i, const PathPoint& j);
// Sorts the two points by time and dispatches on the level comparison
// (the boundary eta_i = eta_j belongs to the space-like branch).
std::pair<Branch, Rational> cov_auto(PathPoint i, PathPoint j);

// Coefficients c_{k1}..c_{kk} of the triangular system
//   sum_l c_kl (eta w^{-1} + tau1 + tau1 w)^l [w^r]
//     = (eta w^{-1} + tau2 + tau2 w)^k [w^r],   r = -1..-k.
std::vector<Rational> solve_ckl(int k, const Rational& tau1, const Rational& tau2,
                                const Rational& eta);

// Checks, for r = 1..k, that the same c_kl satisfy
//   sum_l c_kl (eta z^{-1} + tau1 + tau1 z)^l [z^r]
//     = (eta (tau2/tau1) z^{-1} + tau2 + tau1 z)^k [z^r].
bool verify_timelike_identity(int k, const Rational& tau1, const Rational& tau2,
                              const Rational& eta);

// Ornstein-Uhlenbeck rescaling check: with q = e^{tau_j - tau_i} and
// a = e^{tau_i} kept as exact symbols, the rescaled space-like and time-like
// branch formulas agree after swapping the eta subscripts. Returns the
// comparison result; at the boundary eta_i = eta_j callers decide what to
// make of it.
bool ou_rescale_compare(const PathPoint& i, const PathPoint& j);

}  // namespace glnwalk::cov
