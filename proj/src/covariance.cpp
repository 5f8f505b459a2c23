#include "glnwalk/covariance.hpp"

#include <algorithm>
#include <stdexcept>

namespace glnwalk::cov {

void validate(const PathPoint& p) {
  if (!(p.eta > Rational(0)) || !(p.tau > Rational(0)) || p.k < 1)
    throw std::domain_error("PathPoint: need eta > 0, tau > 0, k >= 1");
}

MultiPoly residue_pair(const LaurentPoly& F, const LaurentPoly& G) {
  MultiPoly out;
  if (F.is_zero() || G.is_zero()) return out;
  int rmax = std::min(F.max_exp(), -G.min_exp());
  for (int r = 1; r <= rmax; ++r) {
    const MultiPoly& f = F.coeff(r);
    const MultiPoly& g = G.coeff(-r);
    if (f.is_zero() || g.is_zero()) continue;
    out += MultiPoly(Rational(r)) * f * g;
  }
  return out;
}

LaurentPoly moment_factor(Symbol var, const MultiPoly& eta, const MultiPoly& tau, int k) {
  LaurentPoly base(var);
  base.add_term(-1, eta);
  base.add_term(0, tau);
  base.add_term(1, tau);
  return base.pow(static_cast<unsigned>(k));
}

namespace {

Symbol z_symbol() { return Symbol::named("z"); }
Symbol w_symbol() { return Symbol::named("w"); }

}  // namespace

Rational cov_spacelike(const PathPoint& i, const PathPoint& j) {
  validate(i);
  validate(j);
  if (!(i.eta >= j.eta && i.tau <= j.tau))
    throw std::domain_error("cov_spacelike: requires eta_i >= eta_j and tau_i <= tau_j");
  LaurentPoly F = moment_factor(z_symbol(), MultiPoly(i.eta), MultiPoly(i.tau), i.k);
  LaurentPoly G = moment_factor(w_symbol(), MultiPoly(j.eta), MultiPoly(j.tau), j.k);
  return residue_pair(F, G).constant_value();
}

Rational cov_timelike(const PathPoint& i, const PathPoint& j) {
  validate(i);
  validate(j);
  if (!(i.eta < j.eta && i.tau <= j.tau))
    throw std::domain_error("cov_timelike: requires eta_i < eta_j and tau_i <= tau_j");
  // z factor carries the later point via (eta_j (tau_j/tau_i) z^{-1} + tau_j + tau_i z)^{k_j}
  LaurentPoly F(z_symbol());
  F.add_term(-1, MultiPoly(j.eta * j.tau / i.tau));
  F.add_term(0, MultiPoly(j.tau));
  F.add_term(1, MultiPoly(i.tau));
  F = F.pow(static_cast<unsigned>(j.k));
  LaurentPoly G = moment_factor(w_symbol(), MultiPoly(i.eta), MultiPoly(i.tau), i.k);
  return residue_pair(F, G).constant_value();
}

std::pair<Branch, Rational> cov_auto(PathPoint i, PathPoint j) {
  validate(i);
  validate(j);
  if (i.tau > j.tau) std::swap(i, j);
  if (i.eta >= j.eta) return {Branch::spacelike, cov_spacelike(i, j)};
  return {Branch::timelike, cov_timelike(i, j)};
}

std::vector<Rational> solve_ckl(int k, const Rational& tau1, const Rational& tau2,
                                const Rational& eta) {
  if (k < 1) throw std::invalid_argument("solve_ckl: k >= 1 required");
  if (!(tau1 > Rational(0)) || !(tau2 > Rational(0)) || !(eta > Rational(0)))
    throw std::domain_error("solve_ckl: parameters must be positive");
  Symbol w = w_symbol();
  std::vector<LaurentPoly> A;  // A[l-1] = (eta w^{-1} + tau1 + tau1 w)^l
  A.reserve(k);
  for (int l = 1; l <= k; ++l)
    A.push_back(moment_factor(w, MultiPoly(eta), MultiPoly(tau1), l));
  LaurentPoly B = moment_factor(w, MultiPoly(eta), MultiPoly(tau2), k);

  // lowest Laurent exponent of the l-th column is -l, so the system over
  // rows r = -k..-1 is triangular with diagonal eta^l
  std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
  for (int l = k; l >= 1; --l) {
    Rational rhs = B.coeff(-l).constant_value();
    for (int m = l + 1; m <= k; ++m) rhs -= c[m - 1] * A[m - 1].coeff(-l).constant_value();
    Rational diag = A[l - 1].coeff(-l).constant_value();
    if (diag.is_zero()) throw std::domain_error("solve_ckl: singular system");
    c[l - 1] = rhs / diag;
  }
  return c;
}

bool verify_timelike_identity(int k, const Rational& tau1, const Rational& tau2,
                              const Rational& eta) {
  auto c = solve_ckl(k, tau1, tau2, eta);
  Symbol z = z_symbol();
  std::vector<LaurentPoly> A;
  A.reserve(k);
  for (int l = 1; l <= k; ++l)
    A.push_back(moment_factor(z, MultiPoly(eta), MultiPoly(tau1), l));
  LaurentPoly R(z);
  R.add_term(-1, MultiPoly(eta * tau2 / tau1));
  R.add_term(0, MultiPoly(tau2));
  R.add_term(1, MultiPoly(tau1));
  R = R.pow(static_cast<unsigned>(k));
  for (int r = 1; r <= k; ++r) {
    Rational lhs(0);
    for (int l = 1; l <= k; ++l) lhs += c[l - 1] * A[l - 1].coeff(r).constant_value();
    if (lhs != R.coeff(r).constant_value()) return false;
  }
  return true;
}

namespace {

// sum_{r>=1} r q^{K-r} F[z^r] G[w^{-r}]; K clears all negative q powers
MultiPoly weighted_residue(const LaurentPoly& F, const LaurentPoly& G, Symbol q, int K) {
  MultiPoly out;
  if (F.is_zero() || G.is_zero()) return out;
  int rmax = std::min(F.max_exp(), -G.min_exp());
  for (int r = 1; r <= rmax; ++r) {
    const MultiPoly& f = F.coeff(r);
    const MultiPoly& g = G.coeff(-r);
    if (f.is_zero() || g.is_zero()) continue;
    if (K - r < 0) throw std::logic_error("weighted_residue: negative q power");
    out += MultiPoly(Rational(r)) * MultiPoly::var(q).pow(static_cast<unsigned>(K - r)) * f * g;
  }
  return out;
}

}  // namespace

bool ou_rescale_compare(const PathPoint& i, const PathPoint& j) {
  validate(i);
  validate(j);
  if (!(i.tau <= j.tau)) throw std::domain_error("ou_rescale_compare: requires tau_i <= tau_j");
  // a = e^{tau_i}, q = e^{tau_j - tau_i}; e^{tau_j} = a q
  Symbol a = Symbol::named("a"), q = Symbol::named("q");
  Symbol z = z_symbol(), w = w_symbol();
  MultiPoly A = MultiPoly::var(a), AQ = MultiPoly::var(a) * MultiPoly::var(q);
  const int K = std::min(i.k, j.k);

  auto ou_factor = [](Symbol var, const MultiPoly& eta, const MultiPoly& mid, int k) {
    LaurentPoly base(var);
    base.add_term(-1, eta);
    base.add_term(0, mid);
    base.add_term(1, MultiPoly(1));
    return base.pow(static_cast<unsigned>(k));
  };

  // space-like branch after rescaling: (eta_i z^-1 + a + z)^{k_i} (eta_j w^-1 + aq + w)^{k_j}
  MultiPoly sp = weighted_residue(ou_factor(z, MultiPoly(i.eta), A, i.k),
                                  ou_factor(w, MultiPoly(j.eta), AQ, j.k), q, K);
  // time-like branch with the eta subscripts swapped:
  // (eta_i z^-1 + aq + z)^{k_j} (eta_j w^-1 + a + w)^{k_i}
  MultiPoly ti_swapped = weighted_residue(ou_factor(z, MultiPoly(i.eta), AQ, j.k),
                                          ou_factor(w, MultiPoly(j.eta), A, i.k), q, K);
  return sp == ti_swapped;
}

}  // namespace glnwalk::cov
