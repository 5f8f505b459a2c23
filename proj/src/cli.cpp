#include "glnwalk/cli.hpp"

#include "glnwalk/center.hpp"
#include "glnwalk/covariance.hpp"
#include "glnwalk/element_io.hpp"
#include "glnwalk/oracle.hpp"
#include "glnwalk/surface.hpp"
#include "glnwalk/ugln.hpp"
#include "glnwalk/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace glnwalk::cli {

namespace {

using json = nlohmann::ordered_json;
using ugln::NCElement;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GLNWALK_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("GLNWALK_SEED is not an integer");
    }
  }
  return verify::kDefaultSeed;
}

// Times and parameters of the symbolic subcommands: exact rational or a
// symbol name; floats are rejected.
MultiPoly parse_time(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw std::invalid_argument("floating-point times are not accepted; use p/q or a symbol");
  if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '-'))
    return MultiPoly(Rational::parse(text));
  return MultiPoly::var(Symbol::named(text));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json element_json(const NCElement& e) {
  std::vector<std::pair<ugln::Word, MultiPoly>> v(e.terms().begin(), e.terms().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  json terms = json::array();
  for (auto& [w, c] : v)
    terms.push_back({{"word", ugln::word_str(w)}, {"coeff", c.str()}});
  return {{"rank", e.rank()}, {"terms", terms}};
}

surface::Schedule parse_schedule(const std::string& text) {
  surface::Schedule sched;
  for (auto& part : split(text, ';')) {
    std::string p = part;
    p.erase(std::remove_if(p.begin(), p.end(),
                           [](char c) { return c == '(' || c == ')' || c == ' '; }),
            p.end());
    auto fields = split(p, ',');
    if (fields.size() != 2) throw std::invalid_argument("schedule: expected (level,time) pairs");
    sched.push_back({std::stoi(fields[0]), std::stod(fields[1])});
  }
  return sched;
}

std::vector<surface::Observable> parse_observables(const std::string& text) {
  std::vector<surface::Observable> obs;
  for (auto& part : split(text, ';')) {
    if (part.size() >= 2 && part[0] == 'p' &&
        std::all_of(part.begin() + 1, part.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      obs.push_back(surface::Observable::power_sum(std::stoi(part.substr(1))));
    } else {
      obs.push_back(surface::Observable::from_poly(MultiPoly::parse(part)));
    }
  }
  return obs;
}

surface::InterlacedArray parse_initial(const std::string& text) {
  surface::InterlacedArray a;
  for (auto& row : split(text, ';')) {
    std::vector<long long> level;
    for (auto& v : split(row, ',')) level.push_back(std::stoll(v));
    a.levels.push_back(std::move(level));
  }
  surface::check_interlacing(a);
  return a;
}

cov::PathPoint parse_point(const std::string& text) {
  auto fields = split(text, ',');
  if (fields.size() != 3)
    throw std::invalid_argument("point: expected k,eta,tau (exact rationals)");
  cov::PathPoint p;
  p.k = std::stoi(fields[0]);
  p.eta = Rational::parse(fields[1]);
  p.tau = Rational::parse(fields[2]);
  cov::validate(p);
  return p;
}

std::vector<std::vector<long long>> parse_gt_lambdas(const std::string& text, int rank) {
  std::vector<std::vector<long long>> lambdas(rank);
  std::vector<bool> seen(rank, false);
  for (auto& part : split(text, ';')) {
    auto kv = split(part, ':');
    if (kv.size() != 2) throw std::invalid_argument("gt: expected level:entries pairs");
    int level = std::stoi(kv[0]);
    if (level < 1 || level > rank) throw std::invalid_argument("gt: level out of range");
    for (auto& v : split(kv[1], ',')) lambdas[level - 1].push_back(std::stoll(v));
    seen[level - 1] = true;
  }
  for (int m = 1; m <= rank; ++m)
    if (!seen[m - 1])
      throw std::invalid_argument("gt: missing lambda^(" + std::to_string(m) + ")");
  return lambdas;
}

std::vector<long long> parse_lambda(const std::string& text) {
  std::vector<long long> v;
  for (auto& f : split(text, ',')) v.push_back(std::stoll(f));
  return v;
}

center::Partition parse_partition(const std::string& text) {
  center::Partition rho;
  for (auto& f : split(text, ',')) rho.push_back(std::stoi(f));
  for (std::size_t i = 1; i < rho.size(); ++i)
    if (rho[i] > rho[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  return rho;
}

json expansion_json(const center::PsiExpansion& e) {
  json arr = json::array();
  for (auto& [rho, c] : e) arr.push_back({{"rho", rho}, {"coeff", c.str()}});
  return arr;
}

json asym_json(const std::map<center::Partition, MultiPoly>& m) {
  json arr = json::array();
  for (auto& [rho, c] : m) arr.push_back({{"rho", rho}, {"cprime", c.str()}});
  return arr;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact non-commutative random walk on U(gl_N), surface simulator, and "
               "covariance calculus"};
  app.require_subcommand(1);

  // ---- state
  std::string expr, time_text = "t";
  int rank = 0, max_degree = ugln::kDefaultStateDegreeLimit;
  auto* c_state = app.add_subcommand("state", "state <X>_t of an element");
  c_state->add_option("--expr,--monomial", expr, "element, e.g. E[2,1]*E[1,2]")->required();
  c_state->add_option("--t", time_text, "time: exact rational or symbol");
  c_state->add_option("--N", rank, "ambient rank (default: inferred)");
  c_state->add_option("--max-degree", max_degree, "set-partition degree cap");

  auto* c_nf = app.add_subcommand("normal-form", "PBW normal form of an element");
  c_nf->add_option("--expr", expr)->required();
  c_nf->add_option("--N", rank);

  auto* c_pt = app.add_subcommand("apply-pt", "Markov operator P_t applied to an element");
  c_pt->add_option("--expr", expr)->required();
  c_pt->add_option("--t", time_text);
  c_pt->add_option("--N", rank);
  bool pt_normalize = false;
  c_pt->add_flag("--normal-form", pt_normalize, "normal-order the output");

  int k = 1, Nopt = 2;
  auto* c_psi = app.add_subcommand("psi", "central generator Psi_k in U(gl_N)");
  c_psi->add_option("--k", k)->required();
  c_psi->add_option("--N", Nopt)->required();

  auto* c_hc = app.add_subcommand("hc", "Harish-Chandra image");
  c_hc->add_option("--k", k, "use Psi_k");
  c_hc->add_option("--N", Nopt);
  c_hc->add_option("--expr", expr, "or an explicit central element");
  bool hc_skip_central = false;
  c_hc->add_flag("--assume-central", hc_skip_central,
                 "skip the commutator check, keep the symmetry certificate");

  auto* c_ptx = app.add_subcommand("pt-expand", "P_t Psi_k expanded over Psi_rho products");
  c_ptx->add_option("--k", k)->required();
  c_ptx->add_option("--N", Nopt)->required();
  c_ptx->add_option("--t", time_text);

  std::string lambda_text, gt_text;
  auto* c_eval = app.add_subcommand("eval", "evaluate a central element at lambda");
  c_eval->add_option("--psi", k, "use P_t Psi_k");
  c_eval->add_option("--N", Nopt);
  c_eval->add_option("--t", time_text);
  c_eval->add_option("--lambda", lambda_text, "highest weight, e.g. 4,2");
  c_eval->add_option("--expr", expr, "explicit element (with --gt for multi-level)");
  c_eval->add_option("--gt", gt_text, "Gelfand-Tsetlin pattern, e.g. 2:1,0;1:0");

  int depth = -1;
  std::string rho_text;
  auto* c_asym = app.add_subcommand("asymptotics", "leading coefficients of P_{tau L} Psi_k");
  c_asym->add_option("--k", k);
  c_asym->add_option("--depth", depth, "interpolation depth (default k+2)");
  c_asym->add_option("--rho", rho_text, "product family Psi_rho instead, e.g. 1,1");

  int levels = 1;
  long long replicas = 100000;
  std::uint64_t seed = 0;
  bool seed_given = false, serial = false;
  std::string schedule_text, obs_text = "p1", initial_text, csv_path;
  auto* c_sim = app.add_subcommand("simulate", "push/block surface Monte Carlo");
  c_sim->add_option("--levels", levels, "number of levels N")->required();
  c_sim->add_option("--schedule", schedule_text, "(n,t);(n,t)...")->required();
  c_sim->add_option("--obs", obs_text, "observables per point, e.g. p1;p2");
  c_sim->add_option("--replicas", replicas);
  c_sim->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  c_sim->add_option("--initial", initial_text, "levels from 1 up, e.g. 0;1,-1");
  c_sim->add_flag("--serial", serial, "single-threaded reference path");
  c_sim->add_option("--csv", csv_path, "dump per-replica snapshots as CSV");

  std::string branch = "auto", pi_text, pj_text;
  int verify_ckl = 0;
  auto* c_cov = app.add_subcommand("cov", "exact covariance of the rescaled field");
  c_cov->add_option("--branch", branch)->check(CLI::IsMember({"auto", "spacelike", "timelike"}));
  c_cov->add_option("--i", pi_text, "first point k,eta,tau");
  c_cov->add_option("--j", pj_text, "second point k,eta,tau");
  c_cov->add_option("--verify-ckl", verify_ckl, "run the c_kl identity suite up to this k");

  long long dx = 4, dy = 2, bmax = 50;
  std::string t_text = "3";
  auto* c_det = app.add_subcommand("detform", "N=2 determinantal formula (x,y as printed; "
                                              "shifted coordinates are (x, y-1))");
  c_det->add_option("--x", dx);
  c_det->add_option("--y", dy);
  c_det->add_option("--t", t_text);
  c_det->add_option("--k", k);
  c_det->add_option("--bmax", bmax);

  auto* c_ost = app.add_subcommand("oracle-state", "state via the differentiation oracle");
  c_ost->add_option("--monomial,--expr", expr)->required();

  double ctmc_eps = 1e-9;
  auto* c_ctmc = app.add_subcommand("ctmc", "exact truncated CTMC expectation (rank <= 3)");
  c_ctmc->add_option("--levels", levels)->required();
  c_ctmc->add_option("--schedule", schedule_text)->required();
  c_ctmc->add_option("--obs", obs_text);
  c_ctmc->add_option("--initial", initial_text);
  c_ctmc->add_option("--eps", ctmc_eps, "target truncation bound");

  std::string suite = "quick";
  bool verify_json = false;
  auto* c_verify = app.add_subcommand("verify", "run the cross-check suite");
  c_verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));
  c_verify->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  c_verify->add_flag("--json", verify_json);

  std::vector<std::string> argv_copy(args);
  try {
    std::vector<const char*> argv;
    argv.push_back("glnwalk");
    for (auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!seed_given) seed = default_seed();

    if (*c_state) {
      NCElement e = io::parse_element(expr, rank);
      MultiPoly v = ugln::state(e, parse_time(time_text), Exec::parallel, max_degree);
      out << json{{"value", v.str()}}.dump() << "\n";
    } else if (*c_nf) {
      NCElement e = io::parse_element(expr, rank);
      out << element_json(ugln::normal_form(e)).dump() << "\n";
    } else if (*c_pt) {
      NCElement e = io::parse_element(expr, rank);
      NCElement r = ugln::apply_pt(e, parse_time(time_text));
      if (pt_normalize) r = ugln::normal_form(r);
      out << element_json(r).dump() << "\n";
    } else if (*c_psi) {
      out << element_json(center::psi(k, Nopt)).dump() << "\n";
    } else if (*c_hc) {
      NCElement e = expr.empty() ? center::psi(k, Nopt) : io::parse_element(expr, rank);
      auto hc = center::harish_chandra(e, hc_skip_central
                                              ? center::CentralityCheck::symmetry_only
                                              : center::CentralityCheck::full);
      out << json{{"rank", hc.rank()}, {"poly", hc.poly().str()}}.dump() << "\n";
    } else if (*c_ptx) {
      NCElement pt = ugln::apply_pt(center::psi(k, Nopt), parse_time(time_text));
      auto hc = center::harish_chandra(pt, center::CentralityCheck::symmetry_only);
      out << json{{"k", k}, {"N", Nopt}, {"expansion", expansion_json(center::powersum_decompose(hc))}}
                 .dump()
          << "\n";
    } else if (*c_eval) {
      if (!gt_text.empty()) {
        if (expr.empty()) throw std::invalid_argument("eval --gt requires --expr");
        NCElement e = io::parse_element(expr, rank);
        NCElement pt = ugln::apply_pt(e, parse_time(time_text));
        MultiPoly v = center::gt_evaluate_poly(pt, parse_gt_lambdas(gt_text, e.rank()));
        out << json{{"value", v.str()}}.dump() << "\n";
      } else {
        if (lambda_text.empty()) throw std::invalid_argument("eval requires --lambda");
        NCElement e = expr.empty() ? center::psi(k, Nopt) : io::parse_element(expr, rank);
        NCElement pt = ugln::apply_pt(e, parse_time(time_text));
        MultiPoly v = center::evaluate_at_poly(pt, parse_lambda(lambda_text));
        out << json{{"value", v.str()}}.dump() << "\n";
      }
    } else if (*c_asym) {
      auto m = rho_text.empty() ? center::asymptotic_coeffs(k, depth)
                                : center::asymptotic_coeffs_product(parse_partition(rho_text),
                                                                    depth);
      out << json{{"coeffs", asym_json(m)}}.dump() << "\n";
    } else if (*c_sim) {
      auto initial =
          initial_text.empty() ? surface::densely_packed(levels) : parse_initial(initial_text);
      if (initial.num_levels() != levels)
        throw std::invalid_argument("simulate: --initial does not match --levels");
      auto sched = parse_schedule(schedule_text);
      auto obs = parse_observables(obs_text);
      auto res = surface::mc_expectation(initial, sched, obs, replicas, seed,
                                         serial ? Exec::serial : Exec::parallel);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "replica,point,level,time,positions\n";
        for (long long r = 0; r < replicas; ++r) {
          Rng rng(seed, static_cast<std::uint64_t>(r));
          auto snaps = surface::run_trajectory(initial, sched, rng);
          for (std::size_t j = 0; j < snaps.size(); ++j) {
            csv << r << "," << j << "," << sched[j].level << "," << sched[j].time << ",";
            for (std::size_t q = 0; q < snaps[j].size(); ++q)
              csv << (q ? " " : "") << snaps[j][q];
            csv << "\n";
          }
        }
      }
      out << json{{"mean", res.mean},
                  {"stderr", res.stderr_},
                  {"replicas", res.replicas},
                  {"seed", res.seed}}
                 .dump()
          << "\n";
    } else if (*c_cov) {
      if (verify_ckl > 0) {
        Rng rng(seed, 7);
        bool ok = true;
        const int draws = 20;
        for (int d = 0; d < draws && ok; ++d) {
          Rational tau1(1 + static_cast<long long>(rng.below(9)),
                        1 + static_cast<long long>(rng.below(7)));
          Rational tau2 = tau1 + Rational(static_cast<long long>(rng.below(9)),
                                          1 + static_cast<long long>(rng.below(7)));
          Rational eta(1 + static_cast<long long>(rng.below(9)),
                       1 + static_cast<long long>(rng.below(7)));
          for (int kk = 1; kk <= verify_ckl && ok; ++kk)
            ok = cov::verify_timelike_identity(kk, tau1, tau2, eta);
        }
        out << json{{"k", verify_ckl}, {"draws", draws}, {"ok", ok}}.dump() << "\n";
        return ok ? 0 : 1;
      }
      cov::PathPoint pi = parse_point(pi_text), pj = parse_point(pj_text);
      cov::Branch b;
      Rational value;
      if (branch == "spacelike") {
        b = cov::Branch::spacelike;
        value = cov::cov_spacelike(pi, pj);
      } else if (branch == "timelike") {
        b = cov::Branch::timelike;
        value = cov::cov_timelike(pi, pj);
      } else {
        std::tie(b, value) = cov::cov_auto(pi, pj);
      }
      out << json{{"branch", b == cov::Branch::spacelike ? "spacelike" : "timelike"},
                  {"value", value.str()}}
                 .dump()
          << "\n";
    } else if (*c_det) {
      oracle::DetFormQuery q;
      q.x = dx;
      q.y = dy;
      q.t = Rational::parse(t_text);
      q.k = k;
      q.b_max = bmax;
      auto r = oracle::detform_n2(q);
      out << json{{"value", r.value}, {"exact", r.exact.str()}}.dump() << "\n";
    } else if (*c_ost) {
      NCElement e = io::parse_element(expr, 0);
      MultiPoly total;
      for (auto& [w, c] : e.terms())
        total += c * oracle::state_diff_oracle(w, Symbol::named("t"));
      out << json{{"value", total.str()}}.dump() << "\n";
    } else if (*c_ctmc) {
      auto initial =
          initial_text.empty() ? surface::densely_packed(levels) : parse_initial(initial_text);
      auto res = oracle::ctmc_expectation(initial, parse_schedule(schedule_text),
                                          parse_observables(obs_text), ctmc_eps);
      out << json{{"value", res.value}, {"bound", res.error_bound}}.dump() << "\n";
    } else if (*c_verify) {
      verify::SuiteOptions opts;
      opts.full = suite == "full";
      opts.seed = seed;
      auto reports = verify::run_suite(opts, verify_json ? nullptr : &out);
      if (verify_json) {
        json arr = json::array();
        for (auto& r : reports)
          arr.push_back({{"criterion", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
        out << arr.dump() << "\n";
      }
      return verify::all_passed(reports) ? 0 : 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace glnwalk::cli
