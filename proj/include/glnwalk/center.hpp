#pragma once

#include "glnwalk/ugln.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace glnwalk::center {

using ugln::NCElement;

// Closed walk of length k at the distinguished vertex `base` in the complete
// directed graph with loops on {1..base}: vertices v_0 = v_k = base.
struct PathSpec {
  int base = 1;
  std::vector<int> vertices;
};

std::vector<PathSpec> enum_paths(int m, int k);  // all m^(k-1) walks
int first_return(const PathSpec& p);             // r(pi)

// r(pi) times the product of edge labels: E_uv for u != v, E_uu - (base-1)
// for a loop.
NCElement e_of_path(const PathSpec& p, int ambient_rank);

// Central generator Psi_k of Z(U(gl_N)), built from closed walks.
NCElement psi(int k, int N);

// Psi_k of U(gl_M) embedded at ambient rank N (not central for M < N).
NCElement psi_sub(int k, int M, int N);

Symbol x_symbol(int m);                // shifted variable x_m
MultiPoly power_sum(int k, int N);     // p_k(x_1..x_N)

// Polynomial in the shifted variables x_m = lambda_m - m + 1, symmetric
// under permutations of x_1..x_N (parameter symbols such as t may appear
// in coefficients).
class ShiftedSymPoly {
 public:
  ShiftedSymPoly(int rank, MultiPoly p) : rank_(rank), p_(std::move(p)) {}
  int rank() const { return rank_; }
  const MultiPoly& poly() const { return p_; }
  int x_degree() const;
  bool is_symmetric() const;

 private:
  int rank_;
  MultiPoly p_;
};

enum class CentralityCheck { full, symmetry_only };

// Harish-Chandra projection: normal-order, keep purely diagonal words,
// E_mm -> lambda_m, re-express in x_m = lambda_m - m + 1. Rejects non-central
// input (full commutator check by default; the symmetry certificate of the
// image is always enforced).
ShiftedSymPoly harish_chandra(const NCElement& x,
                              CentralityCheck check = CentralityCheck::full,
                              Exec exec = Exec::parallel);

// Scalar by which a central element acts on V_lambda: the HC image at
// x_m = lambda_m - m + 1. The _poly variant keeps parameter symbols.
MultiPoly evaluate_at_poly(const NCElement& x, const std::vector<long long>& lambda,
                           CentralityCheck check = CentralityCheck::full);
Rational evaluate_at(const NCElement& x, const std::vector<long long>& lambda,
                     CentralityCheck check = CentralityCheck::full);

using Partition = std::vector<int>;  // weakly decreasing positive parts

int weight(const Partition& rho);  // |rho| + length
std::vector<Partition> partitions_with_sum_at_most(int d);
MultiPoly powersum_product(const Partition& rho, int N);  // prod_i p_{rho_i}

using PsiExpansion = std::map<Partition, MultiPoly>;

// Unique expansion p = sum_rho c_rho prod_i p_{rho_i}(x); requires
// x-degree <= rank (power sums p_1..p_N are independent up to there).
PsiExpansion powersum_decompose(const ShiftedSymPoly& p);
MultiPoly reconstruct(const PsiExpansion& e, int N);

// Evaluation of an element of the Gelfand-Tsetlin subalgebra at a pattern
// (lambda^(1), ..., lambda^(N)): decomposes the element over products of
// sub-rank Psi's and evaluates each factor at its own level. lambdas[M-1]
// is lambda^(M) and must have M entries.
MultiPoly gt_evaluate_poly(const NCElement& x,
                           const std::vector<std::vector<long long>>& lambdas);
Rational gt_evaluate(const NCElement& x,
                     const std::vector<std::vector<long long>>& lambdas);

Symbol time_symbol();  // t
Symbol tau_symbol();   // tau
Symbol eta_symbol();   // eta

// Leading coefficients c'_{k,rho}(tau, eta) of P_{tau L} Psi_k at rank
// N ~ eta L: exact P_t expansions at ranks N = k+1 .. k+1+depth, decomposed
// in the Psi basis, interpolated in N (last rank is the degree-bound
// witness), then t -> tau L, N -> eta L with the L^{k+1-wt(rho)} coefficient
// extracted. depth < 0 selects the default k+2.
std::map<Partition, MultiPoly> asymptotic_coeffs(int k, int depth = -1);

// Same for the product family Psi_rho = prod_i Psi_{rho_i} with top weight
// wt(rho) (covers the printed P_t Psi_1^2 line).
std::map<Partition, MultiPoly> asymptotic_coeffs_product(const Partition& rho,
                                                         int depth = -1);

}  // namespace glnwalk::center
