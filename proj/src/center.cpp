#include "glnwalk/center.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace glnwalk::center {

std::vector<PathSpec> enum_paths(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("enum_paths: need m >= 1, k >= 1");
  std::vector<PathSpec> out;
  std::vector<int> mid(static_cast<std::size_t>(k) - 1, 1);
  for (;;) {
    PathSpec p;
    p.base = m;
    p.vertices.reserve(k + 1);
    p.vertices.push_back(m);
    p.vertices.insert(p.vertices.end(), mid.begin(), mid.end());
    p.vertices.push_back(m);
    out.push_back(std::move(p));
    int pos = static_cast<int>(mid.size()) - 1;
    while (pos >= 0 && mid[pos] == m) mid[pos--] = 1;
    if (pos < 0) break;
    ++mid[pos];
  }
  return out;
}

int first_return(const PathSpec& p) {
  for (std::size_t s = 1; s < p.vertices.size(); ++s)
    if (p.vertices[s] == p.base) return static_cast<int>(s);
  throw std::logic_error("first_return: path does not return");
}

NCElement e_of_path(const PathSpec& p, int ambient_rank) {
  const int m = p.base;
  NCElement acc = NCElement::constant(ambient_rank, MultiPoly(first_return(p)));
  for (std::size_t s = 0; s + 1 < p.vertices.size(); ++s) {
    int u = p.vertices[s], v = p.vertices[s + 1];
    NCElement edge = NCElement::generator(ambient_rank, u, v);
    if (u == v) edge -= NCElement::constant(ambient_rank, MultiPoly(m - 1));
    acc = nc_mul(acc, edge);
  }
  return acc;
}

NCElement psi_sub(int k, int M, int N) {
  if (M > N) throw std::invalid_argument("psi_sub: sub-rank exceeds ambient rank");
  if (k < 1 || M < 1) throw std::invalid_argument("psi_sub: need k >= 1, M >= 1");
  NCElement out(N);
  for (int m = 1; m <= M; ++m)
    for (const auto& p : enum_paths(m, k)) out += e_of_path(p, N);
  return out;
}

NCElement psi(int k, int N) { return psi_sub(k, N, N); }

Symbol x_symbol(int m) { return Symbol::named("x" + std::to_string(m)); }
Symbol time_symbol() { return Symbol::named("t"); }
Symbol tau_symbol() { return Symbol::named("tau"); }
Symbol eta_symbol() { return Symbol::named("eta"); }

MultiPoly power_sum(int k, int N) {
  MultiPoly p;
  for (int m = 1; m <= N; ++m) p += MultiPoly::var(x_symbol(m)).pow(k);
  return p;
}

int ShiftedSymPoly::x_degree() const {
  int d = 0;
  for (auto& [m, c] : p_.terms()) {
    int t = 0;
    for (auto& [s, e] : m.factors()) {
      const std::string& n = s.name();
      if (n.size() > 1 && n[0] == 'x') t += static_cast<int>(e);
    }
    d = std::max(d, t);
  }
  return d;
}

bool ShiftedSymPoly::is_symmetric() const {
  for (int i = 1; i < rank_; ++i) {
    MultiPoly swapped = p_.substitute({{x_symbol(i), MultiPoly::var(x_symbol(i + 1))},
                                       {x_symbol(i + 1), MultiPoly::var(x_symbol(i))}});
    if (swapped != p_) return false;
  }
  return true;
}

ShiftedSymPoly harish_chandra(const NCElement& x, CentralityCheck check, Exec exec) {
  if (check == CentralityCheck::full && !ugln::is_central(x, exec))
    throw std::domain_error("harish_chandra: input is not central");
  NCElement nf = ugln::normal_form(x, exec);
  const int N = x.rank();
  // precompute (x_m + m - 1)^e on demand
  MultiPoly image;
  for (auto& [w, c] : nf.terms()) {
    bool diagonal = true;
    for (ugln::Gen g : w)
      if (ugln::gen_i(g) != ugln::gen_j(g)) {
        diagonal = false;
        break;
      }
    if (!diagonal) continue;
    MultiPoly term(c);
    int run = 0;
    for (std::size_t p = 0; p <= w.size(); ++p) {
      if (p < w.size() && (p == 0 || w[p] == w[p - 1])) {
        ++run;
        continue;
      }
      if (run > 0) {
        int m = ugln::gen_i(w[p - 1]);
        MultiPoly lam = MultiPoly::var(x_symbol(m)) + MultiPoly(m - 1);
        term *= lam.pow(run);
      }
      run = 1;
    }
    image += term;
  }
  ShiftedSymPoly out(N, image);
  if (!out.is_symmetric())
    throw std::logic_error(
        "harish_chandra: image is not symmetric in x (internal consistency failure)");
  return out;
}

MultiPoly evaluate_at_poly(const NCElement& x, const std::vector<long long>& lambda,
                           CentralityCheck check) {
  const int N = x.rank();
  if (static_cast<int>(lambda.size()) != N)
    throw std::invalid_argument("evaluate_at: lambda length must equal the rank");
  ShiftedSymPoly hc = harish_chandra(x, check);
  std::vector<std::pair<Symbol, MultiPoly>> subs;
  for (int m = 1; m <= N; ++m)
    subs.emplace_back(x_symbol(m), MultiPoly(Rational(lambda[m - 1] - m + 1)));
  return hc.poly().substitute(subs);
}

Rational evaluate_at(const NCElement& x, const std::vector<long long>& lambda,
                     CentralityCheck check) {
  return evaluate_at_poly(x, lambda, check).constant_value();
}

int weight(const Partition& rho) {
  int w = static_cast<int>(rho.size());
  for (int p : rho) w += p;
  return w;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  out.push_back(cur);
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_with_sum_at_most(int d) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(d, d, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiPoly powersum_product(const Partition& rho, int N) {
  MultiPoly p(1);
  for (int part : rho) p *= power_sum(part, N);
  return p;
}

namespace {

// Split a monomial into its x-part and the parameter part.
std::pair<Monomial, Monomial> split_x(const Monomial& m) {
  Monomial xs, rest;
  for (auto& [s, e] : m.factors()) {
    const std::string& n = s.name();
    bool is_x = n.size() > 1 && n[0] == 'x' &&
                std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(c); });
    if (is_x)
      xs = xs.times(Monomial::var(s, e));
    else
      rest = rest.times(Monomial::var(s, e));
  }
  return {xs, rest};
}

}  // namespace

PsiExpansion powersum_decompose(const ShiftedSymPoly& p) {
  const int N = p.rank();
  const int d = p.x_degree();
  if (d > N)
    throw std::domain_error("powersum_decompose: degree " + std::to_string(d) +
                            " exceeds rank " + std::to_string(N) +
                            " (power sums no longer independent)");
  std::vector<Partition> parts = partitions_with_sum_at_most(d);

  // rewrite p as x-monomial -> parameter-polynomial
  std::unordered_map<Monomial, MultiPoly, MonomialHash> rhs_map;
  for (auto& [m, c] : p.poly().terms()) {
    auto [xs, rest] = split_x(m);
    MultiPoly add;
    add.add_term(rest, c);
    rhs_map[xs] += add;
  }
  std::vector<MultiPoly> basis;
  basis.reserve(parts.size());
  std::vector<Monomial> rows;
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  auto row_index = [&](const Monomial& m) {
    auto [it, fresh] = row_of.try_emplace(m, rows.size());
    if (fresh) rows.push_back(m);
    return it->second;
  };
  for (auto& [m, c] : rhs_map) row_index(m);
  for (auto& rho : parts) {
    basis.push_back(powersum_product(rho, N));
    for (auto& [m, c] : basis.back().terms()) row_index(m);
  }
  std::vector<std::vector<Rational>> mat(rows.size(),
                                         std::vector<Rational>(parts.size(), Rational(0)));
  std::vector<MultiPoly> rhs(rows.size());
  for (std::size_t col = 0; col < parts.size(); ++col)
    for (auto& [m, c] : basis[col].terms()) mat[row_of[m]][col] = c;
  for (auto& [m, cp] : rhs_map) rhs[row_of[m]] = cp;

  auto sol = linear_solve_exact(std::move(mat), std::move(rhs));
  if (!sol)
    throw std::logic_error("powersum_decompose: symmetric polynomial not in the span");
  PsiExpansion out;
  for (std::size_t col = 0; col < parts.size(); ++col)
    if (!(*sol)[col].is_zero()) out[parts[col]] = (*sol)[col];
  return out;
}

MultiPoly reconstruct(const PsiExpansion& e, int N) {
  MultiPoly out;
  for (auto& [rho, c] : e) out += c * powersum_product(rho, N);
  return out;
}

namespace {

// Multisets of sub-rank generators (k, M), 1 <= k <= M <= N, total degree <= d.
using GenPow = std::vector<std::pair<std::pair<int, int>, int>>;  // ((k,M), exponent)

void gt_products_rec(const std::vector<std::pair<int, int>>& gens, std::size_t idx,
                     int budget, GenPow& cur, std::vector<GenPow>& out) {
  out.push_back(cur);
  for (std::size_t g = idx; g < gens.size(); ++g) {
    int k = gens[g].first;
    if (k > budget) continue;
    cur.emplace_back(gens[g], 1);
    for (int e = 1; e * k <= budget; ++e) {
      cur.back().second = e;
      gt_products_rec(gens, g + 1, budget - e * k, cur, out);
    }
    cur.pop_back();
  }
}

}  // namespace

MultiPoly gt_evaluate_poly(const NCElement& x,
                           const std::vector<std::vector<long long>>& lambdas) {
  const int N = x.rank();
  if (static_cast<int>(lambdas.size()) != N)
    throw std::invalid_argument("gt_evaluate: need lambda^(1)..lambda^(N)");
  for (int M = 1; M <= N; ++M)
    if (static_cast<int>(lambdas[M - 1].size()) != M)
      throw std::invalid_argument("gt_evaluate: lambda^(" + std::to_string(M) +
                                  ") must have " + std::to_string(M) + " entries");

  NCElement nf = ugln::normal_form(x);
  const int d = std::max(0, nf.degree());

  std::vector<std::pair<int, int>> gens;  // (k, M), free generators of the GT subalgebra
  for (int M = 1; M <= N; ++M)
    for (int k = 1; k <= M && k <= d; ++k) gens.emplace_back(k, M);

  std::vector<GenPow> products;
  GenPow cur;
  gt_products_rec(gens, 0, d, cur, products);

  // scalar by which Psi_k^(M) acts on the pattern
  auto psi_value = [&](int k, int M) {
    Rational v(0);
    for (int m = 1; m <= M; ++m) v += Rational(lambdas[M - 1][m - 1] - m + 1).pow(k);
    return v;
  };

  std::vector<NCElement> normalized;
  std::vector<Rational> values;
  normalized.reserve(products.size());
  for (auto& prod : products) {
    NCElement e = NCElement::one(N);
    Rational v(1);
    for (auto& [km, exp] : prod) {
      for (int r = 0; r < exp; ++r) e = nc_mul(e, psi_sub(km.first, km.second, N));
      v *= psi_value(km.first, km.second).pow(exp);
    }
    normalized.push_back(ugln::normal_form(e));
    values.push_back(v);
  }

  std::vector<ugln::Word> rows;
  std::unordered_map<ugln::Word, std::size_t, ugln::WordHash> row_of;
  auto row_index = [&](const ugln::Word& w) {
    auto [it, fresh] = row_of.try_emplace(w, rows.size());
    if (fresh) rows.push_back(w);
    return it->second;
  };
  for (auto& e : normalized)
    for (auto& [w, c] : e.terms()) row_index(w);
  for (auto& [w, c] : nf.terms()) row_index(w);

  std::vector<std::vector<Rational>> mat(rows.size(),
                                         std::vector<Rational>(products.size(), Rational(0)));
  std::vector<MultiPoly> rhs(rows.size());
  for (std::size_t col = 0; col < products.size(); ++col)
    for (auto& [w, c] : normalized[col].terms())
      mat[row_of[w]][col] = c.constant_value();
  for (auto& [w, c] : nf.terms()) rhs[row_of[w]] = c;

  auto sol = linear_solve_exact(std::move(mat), std::move(rhs));
  if (!sol)
    throw std::domain_error(
        "gt_evaluate: element is not in the Gelfand-Tsetlin subalgebra span (degree " +
        std::to_string(d) + ")");
  MultiPoly out;
  for (std::size_t col = 0; col < products.size(); ++col)
    out += (*sol)[col] * MultiPoly(values[col]);
  return out;
}

Rational gt_evaluate(const NCElement& x,
                     const std::vector<std::vector<long long>>& lambdas) {
  return gt_evaluate_poly(x, lambdas).constant_value();
}

namespace {

MultiPoly newton_interpolate(const std::vector<Rational>& nodes,
                             const std::vector<MultiPoly>& values, Symbol var) {
  const std::size_t n = nodes.size();
  std::vector<MultiPoly> dd = values;  // divided differences, in place
  for (std::size_t l = 1; l < n; ++l)
    for (std::size_t s = n - 1; s >= l; --s) {
      MultiPoly num = dd[s] - dd[s - 1];
      Rational den = nodes[s] - nodes[s - l];
      dd[s] = num * (Rational(1) / den);
    }
  MultiPoly result, prefix(1);
  MultiPoly X = MultiPoly::var(var);
  for (std::size_t l = 0; l < n; ++l) {
    result += dd[l] * prefix;
    prefix *= X - MultiPoly(nodes[l]);
  }
  return result;
}

std::map<Partition, MultiPoly> asymptotic_of_family(
    const std::function<NCElement(int)>& family, int top_weight, int min_rank, int depth) {
  if (depth < 1) throw std::invalid_argument("asymptotic_coeffs: depth must be >= 1");
  const Symbol t = time_symbol();
  const Symbol Nsym = Symbol::named("N");
  const Symbol L = Symbol::named("L");
  const Symbol tau = tau_symbol();
  const Symbol eta = eta_symbol();

  const int nsamples = depth + 1;  // last one is the degree-bound witness
  std::vector<int> ranks(nsamples);
  for (int s = 0; s < nsamples; ++s) ranks[s] = min_rank + s;

  std::vector<PsiExpansion> expansions(nsamples);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < nsamples; ++s) {
    try {
      NCElement x = family(ranks[s]);
      NCElement pt = ugln::apply_pt(x, MultiPoly::var(t), Exec::serial);
      ShiftedSymPoly hc = harish_chandra(pt, CentralityCheck::symmetry_only, Exec::serial);
      expansions[s] = powersum_decompose(hc);
    } catch (...) {
#pragma omp critical(glnwalk_asym_fail)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::set<Partition> all_rho;
  for (auto& e : expansions)
    for (auto& [rho, c] : e) all_rho.insert(rho);

  std::map<Partition, MultiPoly> out;
  for (const auto& rho : all_rho) {
    std::vector<Rational> nodes;
    std::vector<MultiPoly> vals;
    for (int s = 0; s < depth; ++s) {
      nodes.emplace_back(ranks[s]);
      auto it = expansions[s].find(rho);
      vals.push_back(it == expansions[s].end() ? MultiPoly() : it->second);
    }
    MultiPoly in_N = newton_interpolate(nodes, vals, Nsym);
    // witness: the interpolant must reproduce the extra sample exactly
    auto itw = expansions[nsamples - 1].find(rho);
    MultiPoly witness = itw == expansions[nsamples - 1].end() ? MultiPoly() : itw->second;
    MultiPoly predicted =
        in_N.substitute({{Nsym, MultiPoly(Rational(ranks[nsamples - 1]))}});
    if (predicted != witness)
      throw std::domain_error(
          "asymptotic_coeffs: interpolation degree bound violated; raise the depth");

    MultiPoly scaled = in_N.substitute({{t, MultiPoly::var(tau) * MultiPoly::var(L)},
                                        {Nsym, MultiPoly::var(eta) * MultiPoly::var(L)}});
    if (scaled.is_zero()) continue;
    const int target = top_weight - weight(rho);
    if (scaled.degree_in(L) > target)
      throw std::logic_error("asymptotic_coeffs: L-order exceeds the weight bound");
    MultiPoly leading = scaled.coeff_of(L, static_cast<unsigned>(target));
    if (!leading.is_zero()) out[rho] = leading;
  }
  return out;
}

}  // namespace

std::map<Partition, MultiPoly> asymptotic_coeffs(int k, int depth) {
  if (k < 1) throw std::invalid_argument("asymptotic_coeffs: k >= 1 required");
  if (depth < 0) depth = k + 2;
  return asymptotic_of_family([k](int N) { return psi(k, N); }, k + 1, k + 1, depth);
}

std::map<Partition, MultiPoly> asymptotic_coeffs_product(const Partition& rho, int depth) {
  if (rho.empty()) throw std::invalid_argument("asymptotic_coeffs_product: empty partition");
  int total = 0;
  for (int p : rho) total += p;
  if (depth < 0) depth = total + 2;
  auto family = [rho](int N) {
    NCElement e = NCElement::one(N);
    for (int p : rho) e = nc_mul(e, psi(p, N));
    return e;
  };
  return asymptotic_of_family(family, weight(rho), total + 1, depth);
}

}  // namespace glnwalk::center
