#include "glnwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace glnwalk::oracle {

MultiPoly bell_polynomial(int m, Symbol t) {
  if (m < 0) throw std::invalid_argument("bell_polynomial: m >= 0");
  // Stirling numbers of the second kind, S(n+1,k) = k S(n,k) + S(n,k-1)
  std::vector<std::vector<BigInt>> S(m + 1, std::vector<BigInt>(m + 1, BigInt(0)));
  S[0][0] = 1;
  for (int n = 1; n <= m; ++n)
    for (int k = 1; k <= n; ++k) S[n][k] = BigInt(k) * S[n - 1][k] + S[n - 1][k - 1];
  MultiPoly out;
  if (m == 0) return MultiPoly(1);
  for (int k = 1; k <= m; ++k)
    out += MultiPoly(Rational(S[m][k])) * MultiPoly::var(t).pow(k);
  return out;
}

MultiPoly state_diff_oracle(const ugln::Word& w, Symbol t, int degree_cap) {
  const int m = static_cast<int>(w.size());
  if (m > degree_cap)
    throw std::domain_error("state_diff_oracle: degree cap exceeded");
  if (m == 0) return MultiPoly(1);
  int N = 1;
  for (ugln::Gen g : w) N = std::max({N, ugln::gen_i(g), ugln::gen_j(g)});

  // c[mask] = Tr(prod_{b in mask, ascending} E_{i_b j_b}) via dense matrices
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::int64_t> c(full + 1, 0);
  std::vector<std::int64_t> prod(N * N), next(N * N), elem(N * N);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    bool first = true;
    for (int b = 0; b < m; ++b) {
      if (!((mask >> b) & 1u)) continue;
      std::fill(elem.begin(), elem.end(), 0);
      elem[(ugln::gen_i(w[b]) - 1) * N + (ugln::gen_j(w[b]) - 1)] = 1;
      if (first) {
        prod = elem;
        first = false;
        continue;
      }
      std::fill(next.begin(), next.end(), 0);
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) {
          if (prod[r * N + s] == 0) continue;
          for (int u = 0; u < N; ++u) next[r * N + u] += prod[r * N + s] * elem[s * N + u];
        }
      prod = next;
    }
    std::int64_t tr = 0;
    for (int r = 0; r < N; ++r) tr += prod[r * N + r];
    c[mask] = tr;
  }

  // truncated exp of t*Y in the multilinear quotient: T_p[mask] counts
  // ordered p-tuples of disjoint blocks, so [x_full] e^{tY} = sum_p T_p/p! t^p
  std::vector<std::int64_t> T(full + 1, 0), Tn(full + 1, 0);
  T[0] = 1;
  MultiPoly out;
  for (int p = 1; p <= m; ++p) {
    std::fill(Tn.begin(), Tn.end(), 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::int64_t acc = 0;
      for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask)
        if (c[sub] != 0 && T[mask ^ sub] != 0) acc += T[mask ^ sub] * c[sub];
      Tn[mask] = acc;
    }
    T = Tn;
    if (T[full] != 0)
      out += MultiPoly(Rational(BigInt(T[full]), factorial(p))) * MultiPoly::var(t).pow(p);
  }
  return out;
}

namespace {

Rational rational_pow_signed(const Rational& base, long long e) {
  if (e >= 0) return base.pow(static_cast<unsigned>(e));
  return (Rational(1) / base).pow(static_cast<unsigned>(-e));
}

BigInt int_pow(BigInt base, int e) {
  BigInt r = 1;
  for (int q = 0; q < e; ++q) r *= base;
  return r;
}

}  // namespace

DetFormResult detform_n2(const DetFormQuery& q) {
  if (q.x < q.y) throw std::domain_error("detform_n2: requires x >= y");
  if (q.b_max < q.x) throw std::domain_error("detform_n2: requires b_max >= x");
  if (q.t.is_zero()) throw std::domain_error("detform_n2: t must be nonzero");
  const long long fmax = q.b_max - std::min(q.y - 1, q.x) + 2;
  std::vector<Rational> inv_fact(static_cast<std::size_t>(std::max(fmax, 2ll)) + 1);
  {
    BigInt f = 1;
    inv_fact[0] = Rational(1);
    for (std::size_t n = 1; n < inv_fact.size(); ++n) {
      f *= static_cast<long long>(n);
      inv_fact[n] = Rational(BigInt(1), f);
    }
  }
  auto invf = [&](long long n) {
    if (n < 0) return Rational(0);
    return inv_fact[static_cast<std::size_t>(n)];
  };

  Rational num(0), den(0);
  for (long long b = q.x; b <= q.b_max; ++b) {
    for (long long a = q.y; a <= b; ++a) {
      Rational det = invf(b - q.x) * invf(a - q.y) - invf(b - (q.y - 1)) * invf(a - 1 - q.x);
      if (det.is_zero()) continue;
      Rational weight = Rational(b - a + 1) * rational_pow_signed(q.t, b + a) * det;
      Rational observable(int_pow(BigInt(b), q.k) + int_pow(BigInt(a - 1), q.k));
      num += observable * weight;
      den += weight;
    }
  }
  if (den.is_zero()) throw std::domain_error("detform_n2: zero denominator");
  DetFormResult r;
  r.exact = num / den;
  r.value = r.exact.to_double();
  return r;
}

namespace {

using State = std::vector<long long>;  // flattened levels

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (long long v : s) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::vector<long long>> unflatten(const State& s, int N) {
  std::vector<std::vector<long long>> lv(N);
  std::size_t pos = 0;
  for (int n = 1; n <= N; ++n) {
    lv[n - 1].assign(s.begin() + pos, s.begin() + pos + n);
    pos += n;
  }
  return lv;
}

State flatten(const std::vector<std::vector<long long>>& lv) {
  State s;
  for (auto& row : lv) s.insert(s.end(), row.begin(), row.end());
  return s;
}

}  // namespace

CtmcResult ctmc_expectation(const surface::InterlacedArray& initial,
                            const surface::Schedule& schedule,
                            const std::vector<surface::Observable>& observables,
                            double tail_eps, int max_steps_per_epoch) {
  surface::check_interlacing(initial);
  const int N = initial.num_levels();
  if (N > 3)
    throw std::invalid_argument("ctmc_expectation: enumerated state space is only viable for rank <= 3");
  surface::check_schedule(schedule, N);
  if (observables.size() != schedule.size())
    throw std::invalid_argument("ctmc_expectation: one observable per schedule point");
  const int particles = N * (N + 1) / 2;

  long long lo = 0, hi = 0;
  for (auto& row : initial.levels)
    for (long long v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  // positions after K events stay in [lo, hi + K]
  const double maxM =
      std::max(std::abs(static_cast<double>(lo)),
               std::abs(static_cast<double>(hi) +
                        static_cast<double>(max_steps_per_epoch) * schedule.size()));
  // bound on the product of the remaining observables, per epoch
  std::vector<double> remaining_bound(schedule.size() + 1, 1.0);
  for (int e = static_cast<int>(schedule.size()) - 1; e >= 0; --e)
    remaining_bound[e] = remaining_bound[e + 1] *
                         observables[e].abs_bound(maxM, schedule[e].level);

  std::unordered_map<State, double, StateHash> weights;
  weights.emplace(flatten(initial.levels), 1.0);

  double bound = 0.0;
  double t_prev = 0.0;
  int epochs_left = 0;
  for (auto& p : schedule)
    if (p.time > t_prev) ++epochs_left, t_prev = p.time;
  const double eps_per_epoch = epochs_left > 0 ? tail_eps / epochs_left : tail_eps;

  t_prev = 0.0;
  for (std::size_t e = 0; e < schedule.size(); ++e) {
    const double dt = schedule[e].time - t_prev;
    t_prev = schedule[e].time;
    if (dt > 0) {
      const double lam = particles * dt;
      // Poisson pmf, and the truncation step count
      std::vector<double> pmf;
      pmf.push_back(std::exp(-lam));
      double cum = pmf[0];
      int K = 0;
      while (K < max_steps_per_epoch) {
        double tail = std::max(0.0, 1.0 - cum);
        if (tail * remaining_bound[0] <= eps_per_epoch && K >= lam) break;
        ++K;
        pmf.push_back(pmf.back() * lam / K);
        cum += pmf.back();
      }
      double tail = std::max(0.0, 1.0 - cum);
      if (tail * remaining_bound[0] > eps_per_epoch)
        throw std::domain_error("ctmc_expectation: truncation bound not achievable within " +
                                std::to_string(max_steps_per_epoch) + " steps");
      // remaining_bound[0] also covers observables already multiplied in
      bound += tail * remaining_bound[0] + 1e-12;

      std::unordered_map<State, double, StateHash> acc;
      auto add_weighted = [&acc](const State& s, double v) {
        if (v != 0.0) acc[s] += v;
      };
      std::unordered_map<State, double, StateHash> vk = weights;
      for (auto& [s, v] : vk) add_weighted(s, pmf[0] * v);
      for (int k = 1; k <= K; ++k) {
        std::unordered_map<State, double, StateHash> nxt;
        for (auto& [s, v] : vk) {
          auto lv = unflatten(s, N);
          for (int n = 1; n <= N; ++n) {
            for (int i = 1; i <= n; ++i) {
              auto moved = lv;
              if (surface::attempt_jump(moved, n, i))
                nxt[flatten(moved)] += v / particles;
              else
                nxt[s] += v / particles;
            }
          }
        }
        vk = std::move(nxt);
        for (auto& [s, v] : vk) add_weighted(s, pmf[k] * v);
      }
      weights = std::move(acc);
    }
    // multiply by the observable at this schedule point
    std::unordered_map<State, double, StateHash> next;
    for (auto& [s, v] : weights) {
      auto lv = unflatten(s, N);
      double o = observables[e].eval(lv[schedule[e].level - 1]);
      if (o != 0.0 && v != 0.0) next[s] += v * o;
    }
    weights = std::move(next);
  }

  double value = 0.0;
  for (auto& [s, v] : weights) value += v;
  return {value, bound};
}

}  // namespace glnwalk::oracle
