#include "glnwalk/surface.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace glnwalk::surface {

InterlacedArray densely_packed(int N) {
  if (N < 1) throw std::invalid_argument("densely_packed: N >= 1 required");
  InterlacedArray a;
  a.levels.resize(N);
  for (int n = 1; n <= N; ++n) {
    a.levels[n - 1].resize(n);
    for (int i = 1; i <= n; ++i) a.levels[n - 1][i - 1] = -i + 1;
  }
  return a;
}

void check_interlacing(const InterlacedArray& a) {
  const int N = a.num_levels();
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(a.levels[n - 1].size()) != n)
      throw std::domain_error("interlacing: level " + std::to_string(n) + " must hold " +
                              std::to_string(n) + " particles");
    for (int i = 1; i < n; ++i)
      if (!(a.levels[n - 1][i - 1] > a.levels[n - 1][i])) {
        std::ostringstream os;
        os << "interlacing: X^(" << n << ")_" << i << " = " << a.levels[n - 1][i - 1]
           << " must exceed X^(" << n << ")_" << i + 1 << " = " << a.levels[n - 1][i];
        throw std::domain_error(os.str());
      }
  }
  for (int n = 1; n < N; ++n) {
    for (int i = 1; i <= n; ++i) {
      long long upper_i = a.levels[n][i - 1];      // X^(n+1)_i
      long long upper_i1 = a.levels[n][i];         // X^(n+1)_{i+1}
      long long lower = a.levels[n - 1][i - 1];    // X^(n)_i
      if (!(upper_i1 < lower && lower <= upper_i)) {
        std::ostringstream os;
        os << "interlacing: need X^(" << n + 1 << ")_" << i + 1 << " < X^(" << n << ")_" << i
           << " <= X^(" << n + 1 << ")_" << i << ", got " << upper_i1 << " < " << lower
           << " <= " << upper_i;
        throw std::domain_error(os.str());
      }
    }
  }
}

void check_schedule(const Schedule& s, int N) {
  double prev = 0.0;
  for (auto& p : s) {
    if (p.level < 1 || p.level > N)
      throw std::invalid_argument("schedule: level out of range");
    if (p.time < prev)
      throw std::invalid_argument("schedule: times must be weakly increasing and >= 0");
    prev = p.time;
  }
}

Observable Observable::power_sum(int k) {
  if (k < 1) throw std::invalid_argument("Observable: power sum index >= 1");
  Observable o;
  o.power_ = k;
  return o;
}

Observable Observable::from_poly(const MultiPoly& p) {
  Observable o;
  o.poly_ = p;
  return o;
}

double Observable::eval(const std::vector<long long>& xs) const {
  if (power_ > 0) {
    double acc = 0;
    for (long long x : xs) acc += std::pow(static_cast<double>(x), power_);
    return acc;
  }
  std::vector<std::pair<Symbol, Rational>> bind;
  bind.reserve(xs.size());
  for (std::size_t m = 0; m < xs.size(); ++m)
    bind.emplace_back(Symbol::named("x" + std::to_string(m + 1)), Rational(xs[m]));
  return poly_.evaluate(bind).to_double();
}

double Observable::abs_bound(double M, int n) const {
  if (power_ > 0) return n * std::pow(std::max(M, 1.0), power_);
  double acc = 0;
  for (auto& [m, c] : poly_.terms())
    acc += std::abs(c.to_double()) * std::pow(std::max(M, 1.0), m.total_degree());
  return acc;
}

std::string Observable::str() const {
  if (power_ > 0) return "p" + std::to_string(power_);
  return poly_.str();
}

namespace {

// cheap post-event consistency check around one particle
void check_local(const std::vector<std::vector<long long>>& lv, int n, int i) {
  const int N = static_cast<int>(lv.size());
  auto fail = [&](const char* what) {
    std::ostringstream os;
    os << "interlacing violated after event at level " << n << ", index " << i << ": " << what;
    throw std::logic_error(os.str());
  };
  const auto& row = lv[n - 1];
  if (i >= 2 && !(row[i - 2] > row[i - 1])) fail("within-level order");
  if (i < n && !(row[i - 1] > row[i])) fail("within-level order");
  if (n >= 2) {
    const auto& below = lv[n - 2];
    if (i <= n - 1 && !(below[i - 1] <= row[i - 1])) fail("lower-level bound");
    if (i >= 2 && !(row[i - 1] < below[i - 2])) fail("below-right bound");
  }
  if (n < N) {
    const auto& above = lv[n];
    if (!(row[i - 1] <= above[i - 1])) fail("upper-level bound");
    if (!(above[i] < row[i - 1])) fail("upper-level strict bound");
  }
}

}  // namespace

bool attempt_jump(std::vector<std::vector<long long>>& levels, int n, int i) {
  // blocked by the particle below and to the right
  if (i >= 2 && levels[n - 1][i - 1] + 1 == levels[n - 2][i - 2]) return false;
  levels[n - 1][i - 1] += 1;
  const int N = static_cast<int>(levels.size());
  int top = n;
  for (int m = n + 1; m <= N; ++m) {
    if (levels[m - 1][i - 1] < levels[m - 2][i - 1]) {
      levels[m - 1][i - 1] = levels[m - 2][i - 1];  // one-step push
      top = m;
    } else {
      break;
    }
  }
  for (int m = n; m <= top; ++m) check_local(levels, m, i);
  return true;
}

std::vector<std::vector<long long>> run_trajectory(const InterlacedArray& initial,
                                                   const Schedule& schedule, Rng& rng,
                                                   bool paranoid) {
  const int N = initial.num_levels();
  auto levels = initial.levels;

  struct Clock {
    double time;
    int level, index;
    bool operator>(const Clock& o) const {
      return time != o.time ? time > o.time
                            : (level != o.level ? level > o.level : index > o.index);
    }
  };
  std::priority_queue<Clock, std::vector<Clock>, std::greater<Clock>> queue;
  for (int n = 1; n <= N; ++n)
    for (int i = 1; i <= n; ++i) queue.push({rng.exponential(), n, i});

  std::vector<std::vector<long long>> snapshots;
  snapshots.reserve(schedule.size());
  for (auto& point : schedule) {
    while (!queue.empty() && queue.top().time <= point.time) {
      Clock c = queue.top();
      queue.pop();
      attempt_jump(levels, c.level, c.index);
      if (paranoid) check_interlacing({levels});
      queue.push({c.time + rng.exponential(), c.level, c.index});
    }
    snapshots.push_back(levels[point.level - 1]);
  }
  return snapshots;
}

namespace {

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

}  // namespace

McResult mc_expectation(const InterlacedArray& initial, const Schedule& schedule,
                        const std::vector<Observable>& observables, long long replicas,
                        std::uint64_t seed, Exec exec, bool paranoid) {
  if (replicas < 1) throw std::invalid_argument("mc_expectation: replicas >= 1 required");
  if (observables.size() != schedule.size())
    throw std::invalid_argument("mc_expectation: one observable per schedule point");
  check_interlacing(initial);
  check_schedule(schedule, initial.num_levels());

  std::vector<double> values(static_cast<std::size_t>(replicas));
  auto one = [&](long long r) {
    Rng rng(seed, static_cast<std::uint64_t>(r));
    auto snaps = run_trajectory(initial, schedule, rng, paranoid);
    double prod = 1.0;
    for (std::size_t j = 0; j < snaps.size(); ++j) prod *= observables[j].eval(snaps[j]);
    values[static_cast<std::size_t>(r)] = prod;
  };
  if (exec == Exec::serial) {
    for (long long r = 0; r < replicas; ++r) one(r);
  } else {
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < replicas; ++r) one(r);
  }

  McResult res;
  res.replicas = replicas;
  res.seed = seed;
  res.mean = pairwise_sum(values.data(), values.size()) / static_cast<double>(replicas);
  if (replicas > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      double d = values[i] - res.mean;
      sq[i] = d * d;
    }
    double var = pairwise_sum(sq.data(), sq.size()) / static_cast<double>(replicas - 1);
    res.stderr_ = std::sqrt(var / static_cast<double>(replicas));
  }
  return res;
}

}  // namespace glnwalk::surface
