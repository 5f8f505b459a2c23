#include "glnwalk/ugln.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glnwalk::ugln {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (Gen g : w) {
    if (!first) os << "*";
    first = false;
    os << "E[" << gen_i(g) << "," << gen_j(g) << "]";
  }
  return os.str();
}

bool word_is_normal(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (pbw_key(w[p]) > pbw_key(w[p + 1])) return false;
  return true;
}

NCElement::NCElement(int rank) : rank_(rank) {
  if (rank < 1 || rank > 255) throw std::invalid_argument("NCElement: rank out of range");
}

int NCElement::degree() const {
  int d = -1;
  for (auto& [w, c] : t_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

void NCElement::add_term(const Word& w, const MultiPoly& c) {
  if (c.is_zero()) return;
  for (Gen g : w)
    if (gen_i(g) < 1 || gen_i(g) > rank_ || gen_j(g) < 1 || gen_j(g) > rank_)
      throw std::invalid_argument("NCElement: generator index outside rank " +
                                  std::to_string(rank_) + ": " + word_str({g}));
  auto [it, fresh] = t_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MultiPoly NCElement::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? MultiPoly() : it->second;
}

NCElement& NCElement::operator+=(const NCElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("NCElement: rank mismatch");
  for (auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("NCElement: rank mismatch");
  for (auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NCElement& NCElement::operator*=(const MultiPoly& c) {
  if (c.is_zero()) {
    *this = NCElement(rank_);
    return *this;
  }
  for (auto& [w, v] : t_) v *= c;
  return *this;
}

NCElement NCElement::operator-() const {
  NCElement r = *this;
  for (auto& [w, c] : r.t_) c = -c;
  return r;
}

std::string NCElement::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Word, MultiPoly>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << word_str(w);
  }
  return os.str();
}

NCElement nc_mul(const NCElement& a, const NCElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("nc_mul: rank mismatch");
  NCElement r(a.rank());
  for (auto& [wa, ca] : a.terms()) {
    for (auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCElement commutator(const NCElement& a, const NCElement& b) {
  return nc_mul(a, b) - nc_mul(b, a);
}

namespace {

// integer-coefficient expansion of a word into PBW-normal words
using NFExpansion = std::vector<std::pair<Word, std::int64_t>>;

const NFExpansion& nf_word(const Word& w) {
  thread_local std::unordered_map<Word, NFExpansion, WordHash> cache;
  auto hit = cache.find(w);
  if (hit != cache.end()) return hit->second;

  std::size_t p = w.size();
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    if (pbw_key(w[q]) > pbw_key(w[q + 1])) {
      p = q;
      break;
    }
  }

  NFExpansion result;
  if (p == w.size()) {
    result.emplace_back(w, 1);
  } else {
    std::unordered_map<Word, std::int64_t, WordHash> acc;
    auto add_all = [&acc](const Word& u, std::int64_t f) {
      for (auto& [rw, rc] : nf_word(u)) acc[rw] += rc * f;
    };
    Word sw = w;
    std::swap(sw[p], sw[p + 1]);
    add_all(sw, 1);
    Gen a = w[p], b = w[p + 1];
    if (gen_j(a) == gen_i(b)) {
      Word u = w;
      u[p] = gen(gen_i(a), gen_j(b));
      u.erase(u.begin() + p + 1);
      add_all(u, 1);
    }
    if (gen_i(a) == gen_j(b)) {
      Word u = w;
      u[p] = gen(gen_i(b), gen_j(a));
      u.erase(u.begin() + p + 1);
      add_all(u, -1);
    }
    for (auto& [rw, rc] : acc)
      if (rc != 0) result.emplace_back(rw, rc);
  }
  return cache.emplace(w, std::move(result)).first->second;
}

}  // namespace

NCElement normal_form(const NCElement& x, Exec exec) {
  NCElement out(x.rank());
  if (exec == Exec::serial) {
    for (auto& [w, c] : x.terms())
      for (auto& [rw, rc] : nf_word(w)) out.add_term(rw, c * MultiPoly(Rational(rc)));
    return out;
  }
  std::vector<const std::pair<const Word, MultiPoly>*> items;
  items.reserve(x.term_count());
  for (auto& kv : x.terms()) items.push_back(&kv);
#pragma omp parallel
  {
    NCElement local(x.rank());
#pragma omp for schedule(dynamic, 16) nowait
    for (long long idx = 0; idx < static_cast<long long>(items.size()); ++idx) {
      auto& [w, c] = *items[idx];
      for (auto& [rw, rc] : nf_word(w)) local.add_term(rw, c * MultiPoly(Rational(rc)));
    }
#pragma omp critical(glnwalk_nf_merge)
    out += local;
  }
  return out;
}

std::vector<std::int64_t> state_block_counts(const Word& w, int degree_limit) {
  const int m = static_cast<int>(w.size());
  if (m > degree_limit)
    throw std::domain_error("state: word degree " + std::to_string(m) +
                            " exceeds the configured limit " + std::to_string(degree_limit) +
                            " (Bell-number growth)");
  thread_local std::unordered_map<Word, std::vector<std::int64_t>, WordHash> cache;
  auto hit = cache.find(w);
  if (hit != cache.end()) return hit->second;

  std::vector<std::int64_t> counts(static_cast<std::size_t>(m) + 1, 0);
  if (m == 0) {
    counts[0] = 1;
  } else {
    // Blocks are extended in increasing element order, so appending element e
    // to a block requires j_prev = i_e; closure j_last = i_first is checked
    // once all elements are placed.
    struct Blk {
      int first_i, last_j;
    };
    std::vector<Blk> blocks;
    blocks.reserve(m);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == m) {
        for (auto& b : blocks)
          if (b.last_j != b.first_i) return;
        ++counts[blocks.size()];
        return;
      }
      const int ie = gen_i(w[pos]), je = gen_j(w[pos]);
      for (auto& b : blocks) {
        if (b.last_j != ie) continue;
        int saved = b.last_j;
        b.last_j = je;
        self(self, pos + 1);
        b.last_j = saved;
      }
      blocks.push_back({ie, je});
      self(self, pos + 1);
      blocks.pop_back();
    };
    rec(rec, 0);
  }
  cache.emplace(w, counts);
  return counts;
}

namespace {

MultiPoly state_of_word(const Word& w, const std::vector<MultiPoly>& time_pows,
                        int degree_limit) {
  auto counts = state_block_counts(w, degree_limit);
  MultiPoly r;
  for (std::size_t p = 0; p < counts.size(); ++p)
    if (counts[p] != 0) r += time_pows[p] * Rational(counts[p]);
  return r;
}

std::vector<MultiPoly> powers_of(const MultiPoly& t, int up_to) {
  std::vector<MultiPoly> pows(static_cast<std::size_t>(up_to) + 1);
  pows[0] = MultiPoly(1);
  for (int p = 1; p <= up_to; ++p) pows[p] = pows[p - 1] * t;
  return pows;
}

}  // namespace

MultiPoly state(const NCElement& x, const MultiPoly& time, Exec exec, int degree_limit) {
  const int maxdeg = std::max(0, x.degree());
  auto time_pows = powers_of(time, maxdeg);
  if (exec == Exec::serial) {
    MultiPoly out;
    for (auto& [w, c] : x.terms()) out += c * state_of_word(w, time_pows, degree_limit);
    return out;
  }
  std::vector<const std::pair<const Word, MultiPoly>*> items;
  items.reserve(x.term_count());
  for (auto& kv : x.terms()) items.push_back(&kv);
  MultiPoly out;
#pragma omp parallel
  {
    MultiPoly local;
#pragma omp for schedule(dynamic, 32) nowait
    for (long long idx = 0; idx < static_cast<long long>(items.size()); ++idx)
      local += items[idx]->second * state_of_word(items[idx]->first, time_pows, degree_limit);
#pragma omp critical(glnwalk_state_merge)
    out += local;
  }
  return out;
}

std::vector<std::pair<Word, Word>> coproduct(const Word& w) {
  const std::size_t m = w.size();
  if (m > 30) throw std::domain_error("coproduct: word too long");
  std::vector<std::pair<Word, Word>> out;
  out.reserve(1u << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Word left, right;
    for (std::size_t b = 0; b < m; ++b)
      ((mask >> b) & 1u ? left : right).push_back(w[b]);
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

namespace {

void apply_pt_word(NCElement& out, const Word& w, const MultiPoly& c,
                   const std::vector<MultiPoly>& time_pows) {
  const std::size_t m = w.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Word kept, dropped;
    for (std::size_t b = 0; b < m; ++b)
      ((mask >> b) & 1u ? kept : dropped).push_back(w[b]);
    MultiPoly st = state_of_word(dropped, time_pows, kDefaultStateDegreeLimit);
    if (!st.is_zero()) out.add_term(kept, c * st);
  }
}

}  // namespace

NCElement apply_pt(const NCElement& x, const MultiPoly& time, Exec exec) {
  const int maxdeg = std::max(0, x.degree());
  auto time_pows = powers_of(time, maxdeg);
  NCElement out(x.rank());
  if (exec == Exec::serial) {
    for (auto& [w, c] : x.terms()) apply_pt_word(out, w, c, time_pows);
    return out;
  }
  std::vector<const std::pair<const Word, MultiPoly>*> items;
  items.reserve(x.term_count());
  for (auto& kv : x.terms()) items.push_back(&kv);
#pragma omp parallel
  {
    NCElement local(x.rank());
#pragma omp for schedule(dynamic, 16) nowait
    for (long long idx = 0; idx < static_cast<long long>(items.size()); ++idx)
      apply_pt_word(local, items[idx]->first, items[idx]->second, time_pows);
#pragma omp critical(glnwalk_pt_merge)
    out += local;
  }
  return out;
}

bool is_central(const NCElement& x, Exec exec) {
  const int n = x.rank();
  std::vector<Gen> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(gen(k, k));
  for (int k = 1; k < n; ++k) {
    gens.push_back(gen(k, k + 1));
    gens.push_back(gen(k + 1, k));
  }
  bool central = true;
  if (exec == Exec::serial) {
    for (Gen g : gens) {
      NCElement e = NCElement::generator(n, gen_i(g), gen_j(g));
      if (!normal_form(commutator(x, e), Exec::serial).is_zero()) return false;
    }
    return true;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (long long idx = 0; idx < static_cast<long long>(gens.size()); ++idx) {
    bool skip;
#pragma omp atomic read
    skip = central;
    if (!skip) continue;
    NCElement e = NCElement::generator(n, gen_i(gens[idx]), gen_j(gens[idx]));
    if (!normal_form(commutator(x, e), Exec::serial).is_zero()) {
#pragma omp atomic write
      central = false;
    }
  }
  return central;
}

}  // namespace glnwalk::ugln
