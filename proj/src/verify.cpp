#include "gkc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "gkc/asymptotics.hpp"
#include "gkc/counting.hpp"
#include "gkc/kernel.hpp"
#include "gkc/tilted_mc.hpp"

namespace gkc {

namespace {

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return std::string(buf);
}

int mc_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hc, 1u, 4u));
}

SuiteReport suite_oracle() {
  SuiteReport rep{"oracle", {}};
  int cells = 0;
  int equal = 0;
  std::string mismatch;
  for (double g : {0.5, 1.0, 2.0}) {
    const ShapeParams p = make_shape_params(g);
    for (double e : {0.05, 0.1, 0.3, 0.5, 0.9}) {
      const Threshold th = make_threshold(e);
      for (int d = 1; d <= 4; ++d) {
        const CountResult a = exact_count(p, th, d);
        const CountResult b = brute_force_count(p, th, d);
        ++cells;
        if (*a.exact == *b.exact) {
          ++equal;
        } else if (mismatch.empty()) {
          mismatch = fmt("; first mismatch at gamma=%g eps=%g d=%d", g, e, d);
        }
      }
    }
  }
  rep.checks.push_back(
      {"exact_count equals brute_force_count over gamma x eps x d",
       equal == cells,
       fmt("%d/%d cells equal (zero tolerance)", equal, cells) + mismatch});
  return rep;
}

SuiteReport suite_theorem1() {
  SuiteReport rep{"theorem1", {}};
  const ShapeParams p = make_shape_params(1.0);
  const Threshold th = make_threshold(0.1);  // N = 4, main term d^4/24
  const std::array<std::int64_t, 3> ds{1000, 10000, 100000};
  std::array<double, 3> q{};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const CountResult n = exact_count(p, th, ds[i]);
    mpz_class d4;
    mpz_ui_pow_ui(d4.get_mpz_t(), static_cast<unsigned long>(ds[i]), 4);
    const mpz_class excess = 24 * *n.exact - d4;
    q[i] = static_cast<double>(ds[i]) * mpz_get_d(excess.get_mpz_t()) /
           mpz_get_d(d4.get_mpz_t());
  }
  rep.checks.push_back(
      {"first-order coefficient d*(24 n / d^4 - 1) in [9.5, 10.5] at d = 10^4",
       q[1] >= 9.5 && q[1] <= 10.5,
       fmt("values %.6f, %.6f, %.6f at d = 10^3, 10^4, 10^5 (limit 10)", q[0],
           q[1], q[2])});
  rep.checks.push_back(
      {"first-order coefficient in [9.95, 10.05] at d = 10^5",
       q[2] >= 9.95 && q[2] <= 10.05, fmt("measured %.6f", q[2])});
  return rep;
}

SuiteReport suite_theorem2() {
  SuiteReport rep{"theorem2", {}};
  const ShapeParams p = make_shape_params(1.0);
  const std::array<std::int64_t, 4> ds{50, 100, 200, 500};
  auto resid = [&](const Threshold& th, std::int64_t d) {
    const CountResult lc = log_count(p, th, d);
    const AsymptoticEstimate est = joint_log_estimate(p, th, d);
    return std::abs((lc.log_value - est.log_main) / est.residual_scale);
  };
  std::array<double, 4> ra{}, rb{};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    ra[i] = resid(threshold_from_log_eps(-static_cast<double>(ds[i])), ds[i]);
    rb[i] = resid(make_threshold(1.0 / static_cast<double>(ds[i])), ds[i]);
  }
  const bool a_mono = ra[0] > ra[1] && ra[1] > ra[2] && ra[2] > ra[3];
  const bool b_mono = rb[0] > rb[1] && rb[1] > rb[2] && rb[2] > rb[3];
  rep.checks.push_back(
      {"normalized residual along eps = e^-d strictly decreases, final < 0.05",
       a_mono && ra[3] < 0.05,
       fmt("|r| = %.6f, %.6f, %.6f, %.6f at d = 50, 100, 200, 500", ra[0],
           ra[1], ra[2], ra[3])});
  rep.checks.push_back(
      {"normalized residual along eps = 1/d strictly decreases", b_mono,
       fmt("|r| = %.6f, %.6f, %.6f, %.6f at d = 50, 100, 200, 500", rb[0],
           rb[1], rb[2], rb[3])});
  return rep;
}

SuiteReport suite_poisson() {
  SuiteReport rep{"poisson", {}};
  const ShapeParams p = make_shape_params(1.0);
  const Threshold th = make_threshold(0.1);
  bool ok = true;
  double worst = 0.0;
  for (std::int64_t m = 0; m <= 4; ++m) {
    const double limit = poisson_limit_pmf(p, th, m);
    const double v3 = 1e3 * std::abs(tilted_sum_pmf(p, th, 1000, m) - limit);
    const double v4 = 1e4 * std::abs(tilted_sum_pmf(p, th, 10000, m) - limit);
    const double rel = std::abs(v4 - v3) / v3;
    worst = std::max(worst, rel);
    ok = ok && rel <= 0.10;
  }
  rep.checks.push_back(
      {"d*|pmf - poisson| drifts < 10% between d = 10^3 and 10^4 for m <= 4",
       ok, fmt("max relative drift %.4f (bound 0.10)", worst)});
  return rep;
}

SuiteReport suite_clt() {
  SuiteReport rep{"clt", {}};
  const ShapeParams p = make_shape_params(1.0);
  const std::uint64_t seed = 12345;
  const std::uint64_t samples = 100000;
  // eps_d = e^{-sqrt(d)} at d = 25 and 400
  const double ks25 =
      clt_ks_distance(p, threshold_from_log_eps(-5.0), 25, samples, seed);
  const double ks400 =
      clt_ks_distance(p, threshold_from_log_eps(-20.0), 400, samples, seed);
  rep.checks.push_back({"KS distance shrinks from d = 25 to d = 400",
                        ks400 < ks25,
                        fmt("KS = %.4f (d=25) vs %.4f (d=400)", ks25, ks400)});
  rep.checks.push_back({"KS distance at d = 400 below 0.05", ks400 < 0.05,
                        fmt("measured %.4f", ks400)});
  return rep;
}

SuiteReport suite_mc() {
  SuiteReport rep{"mc", {}};
  const ShapeParams p = make_shape_params(1.0);
  const Threshold th = make_threshold(0.1);
  const CountResult ex = exact_count(p, th, 50);
  const double target = mpz_get_d(ex.exact->get_mpz_t());
  int hits = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const McEstimate est = estimate_count(p, th, 50, 100000, seed, mc_threads());
    const double dev = std::abs(est.point - target) / est.std_error;
    worst = std::max(worst, dev);
    if (dev <= 3.0) ++hits;
  }
  rep.checks.push_back(
      {"estimate within 3 reported standard errors for >= 48 of 50 seeds",
       hits >= 48,
       fmt("%d/50 seeds inside; worst deviation %.2f se; exact n = %.0f", hits,
           worst, target)});
  return rep;
}

SuiteReport suite_eigen(const VerifyOptions& opts) {
  SuiteReport rep{"eigen", {}};
  const ShapeParams p = make_shape_params(1.0);
  const std::array<double, 3> pts{0.0, 0.5, 1.0};
  double worst = 0.0;
  for (std::int64_t k = 1; k <= 10; ++k) {
    worst = std::max(
        worst, verify_eigen_equation(p, EigenIndex(k),
                                     std::span<const double>(pts),
                                     opts.quad_order));
  }
  rep.checks.push_back(
      {"integral-operator residual below 1e-8 for k = 1..10, t in {0, 0.5, 1}",
       worst < 1e-8,
       fmt("max residual %.3e at quadrature order %d", worst, opts.quad_order)});
  return rep;
}

SuiteReport suite_mgf() {
  SuiteReport rep{"mgf", {}};
  const ShapeParams p = make_shape_params(1.0);
  double worst_stat = 0.0;
  for (int i = 0; i <= 24; ++i) {
    const double alpha = std::pow(10.0, -3.0 + 0.25 * i);
    const SaddlePoint sp = saddle_point(p, alpha);
    const Mgf g = mgf(p, sp.nu);
    worst_stat = std::max(worst_stat,
                          std::abs(g.d1 / g.value - alpha) / alpha);
  }
  rep.checks.push_back(
      {"saddle stationarity M'/M = alpha to 1e-10 relative, alpha in "
       "10^-3..10^3",
       worst_stat <= 1e-10, fmt("max relative error %.3e", worst_stat)});

  const double h = 1e-5;
  double worst_fd = 0.0;
  for (double nu : {-3.0, -1.0, 0.0, 0.5}) {
    const Mgf gp = mgf(p, nu + h);
    const Mgf gm = mgf(p, nu - h);
    const Mgf g0 = mgf(p, nu);
    const double fd1 = (gp.value - gm.value) / (2.0 * h);
    const double fd2 = (gp.d1 - gm.d1) / (2.0 * h);
    worst_fd = std::max(worst_fd, std::abs(fd1 - g0.d1) / std::abs(g0.d1));
    worst_fd = std::max(worst_fd, std::abs(fd2 - g0.d2) / g0.d2);
  }
  rep.checks.push_back(
      {"M' and M'' match central differences at h = 1e-5 to 1e-6 relative",
       worst_fd <= 1e-6, fmt("max relative error %.3e", worst_fd)});
  return rep;
}

SuiteReport suite_qpt() {
  SuiteReport rep{"qpt", {}};
  const ShapeParams p = make_shape_params(1.0);
  const std::array<std::int64_t, 13> grid{1000,   1778,   3162,   5623,  10000,
                                          17783,  31623,  56234,  100000,
                                          177828, 316228, 562341, 1000000};
  for (double e : {0.1, 0.3}) {
    const Threshold th = make_threshold(e);
    bool mono = true;
    double prev = std::numeric_limits<double>::infinity();
    double first = 0.0, last = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r =
          log_count(p, th, grid[i]).log_value - qpt_bound_log(p, th, grid[i]);
      if (i == 0) first = r;
      last = r;
      if (!(r < prev)) mono = false;
      prev = r;
    }
    rep.checks.push_back(
        {fmt("log n minus QPT envelope decreasing over d = 10^3..10^6, eps=%g",
             e),
         mono, fmt("endpoints %.4f -> %.4f over 13 grid points", first, last)});
  }
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (suite == "oracle") return suite_oracle();
  if (suite == "theorem1") return suite_theorem1();
  if (suite == "theorem2") return suite_theorem2();
  if (suite == "poisson") return suite_poisson();
  if (suite == "clt") return suite_clt();
  if (suite == "mc") return suite_mc();
  if (suite == "eigen") return suite_eigen(opts);
  if (suite == "mgf") return suite_mgf();
  if (suite == "qpt") return suite_qpt();
  if (suite == "all") {
    SuiteReport all{"all", {}};
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      SuiteReport rep = run_suite(name, opts);
      for (CheckResult& c : rep.checks) {
        c.name = name + ": " + c.name;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<std::string> suite_names() {
  return {"oracle", "theorem1", "theorem2", "poisson", "clt",
          "mc",     "eigen",    "mgf",      "qpt",     "all"};
}

}  // namespace gkc
