#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gkc/asymptotics.hpp"
#include "gkc/counting.hpp"
#include "gkc/kernel.hpp"
#include "gkc/rng.hpp"
#include "gkc/tilted_mc.hpp"

using gkc::ShapeParams;
using gkc::Threshold;

TEST_CASE("splitmix stream is deterministic and well scaled") {
  gkc::SplitMix64 a = gkc::block_stream(42, 7);
  gkc::SplitMix64 b = gkc::block_stream(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  gkc::SplitMix64 c = gkc::block_stream(42, 8);
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = c.next_unit_open();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    mean += u;
  }
  mean /= 100000.0;
  CHECK(mean == doctest::Approx(0.5).epsilon(4e-3));
}

TEST_CASE("tilted geometric parameters satisfy the exponential-family identities") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  for (double nu : {-2.0, -0.5, 0.0, 0.3}) {
    const gkc::TiltedGeometric tg = gkc::make_tilted(p, nu);
    CHECK(tg.q ==
          doctest::Approx(std::exp(-(1.0 - nu) * p.abs_ln_omega))
              .epsilon(1e-14));
    const gkc::Mgf m = gkc::mgf(p, nu);
    CHECK(1.0 - tg.q == doctest::Approx((1.0 - p.omega) / m.value)
                            .epsilon(1e-13));
    // mean of the tilted value k |ln omega| equals M'(nu) / M(nu)
    const double mean_value = tg.q / (1.0 - tg.q) * p.abs_ln_omega;
    CHECK(mean_value == doctest::Approx(m.d1 / m.value).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gkc::make_tilted(p, 1.0), std::domain_error);
}

TEST_CASE("tilted geometric sampling matches its distribution") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const gkc::SaddlePoint sp =
      gkc::saddle_point_for(p, gkc::make_threshold(0.1), 100);
  const gkc::TiltedGeometric tg = gkc::make_tilted(p, sp.nu);
  gkc::SplitMix64 rng = gkc::block_stream(2024, 0);
  const int n = 1000000;
  std::vector<std::int64_t> counts(22, 0);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t k = gkc::sample_tilted(tg, rng);
    CHECK(k >= 0);
    sum += static_cast<double>(k);
    counts[std::min<std::int64_t>(k, 21)] += 1;
  }
  const double mean = sum / n;
  const double ref_mean = tg.q / (1.0 - tg.q);
  const double se = std::sqrt(tg.q) / (1.0 - tg.q) / std::sqrt(double(n));
  CHECK(std::abs(mean - ref_mean) <= 4.0 * se);

  // chi-square goodness of fit over bins {0..20, tail}
  double stat = 0.0;
  for (int k = 0; k <= 21; ++k) {
    const double prob = k < 21 ? (1.0 - tg.q) * std::pow(tg.q, k)
                               : std::pow(tg.q, 21);
    const double expected = n * prob;
    if (expected < 1e-12) continue;
    const double diff = counts[k] - expected;
    stat += diff * diff / expected;
  }
  // 0.999 quantile of chi-square with 21 degrees of freedom
  // via the Wilson-Hilferty cube approximation
  const double df = 21.0, z = 3.090232306167813;
  const double crit =
      df * std::pow(1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df)),
                    3.0);
  CHECK(stat < crit);
}

TEST_CASE("a vanishing acceptance ratio returns the floor state") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const gkc::TiltedGeometric tg =
      gkc::make_tilted(p, 1.0 - 690.0 / p.abs_ln_omega);
  CHECK(tg.q < 1e-295);
  gkc::SplitMix64 rng = gkc::block_stream(1, 0);
  for (int i = 0; i < 1000; ++i) CHECK(gkc::sample_tilted(tg, rng) == 0);
}

TEST_CASE("estimator is deterministic for a fixed seed and thread count") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  const gkc::McEstimate a = gkc::estimate_count(p, th, 50, 20000, 9, 1);
  const gkc::McEstimate b = gkc::estimate_count(p, th, 50, 20000, 9, 1);
  CHECK(a.point == b.point);
  CHECK(a.std_error == b.std_error);
  const gkc::McEstimate c = gkc::estimate_count(p, th, 50, 20000, 9, 4);
  CHECK(a.point == c.point);
  CHECK(a.std_error == c.std_error);
  CHECK(a.samples == 20000);
  CHECK(a.seed == 9);
}

TEST_CASE("estimator reproduces a known exact count") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  const gkc::McEstimate est = gkc::estimate_count(p, th, 50, 100000, 7, 4);
  CHECK(std::abs(est.point - 316251.0) <= 3.0 * est.std_error);
  CHECK(est.rel_std_error < 0.02);
  CHECK(est.log_point == doctest::Approx(std::log(est.point)).epsilon(1e-12));
}

TEST_CASE("estimator is unbiased across seeds") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  double sum = 0.0, var_sum = 0.0;
  const int n_seeds = 50;
  for (int seed = 1; seed <= n_seeds; ++seed) {
    const gkc::McEstimate est =
        gkc::estimate_count(p, th, 50, 10000, static_cast<std::uint64_t>(seed),
                            4);
    sum += est.point;
    var_sum += est.std_error * est.std_error;
  }
  const double mean = sum / n_seeds;
  const double se = std::sqrt(var_sum) / n_seeds;
  CHECK(std::abs(mean - 316251.0) <= 3.0 * se);
}

TEST_CASE("estimator collapses when a single function suffices") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.7);
  const gkc::McEstimate est = gkc::estimate_count(p, th, 200, 10000, 3, 2);
  CHECK(std::abs(est.point - 1.0) <= 3.0 * est.std_error + 1e-9);
  CHECK(est.rel_std_error < 0.05);
}

TEST_CASE("estimator rejects too few samples") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  CHECK_THROWS_AS(gkc::estimate_count(p, th, 5, 99, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("untilted estimator cross-checks the tilted one at small dimension") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.3);
  for (std::int64_t d : {1, 3, 5}) {
    const mpz_class exact = *gkc::exact_count(p, th, d).exact;
    const double target = exact.get_d();
    const gkc::McEstimate est =
        gkc::estimate_count_with_tilt(p, th, d, 0.0, 200000, 11, 4);
    CHECK(std::abs(est.point - target) <= 4.0 * est.std_error);
  }
}

TEST_CASE("custom tilt at the saddle point matches the default estimator") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  const gkc::SaddlePoint sp = gkc::saddle_point_for(p, th, 50);
  const gkc::McEstimate a = gkc::estimate_count(p, th, 50, 20000, 5, 2);
  const gkc::McEstimate b =
      gkc::estimate_count_with_tilt(p, th, 50, sp.nu, 20000, 5, 2);
  CHECK(std::abs(a.log_point - b.log_point) < 1e-9);
  CHECK(a.rel_std_error == doctest::Approx(b.rel_std_error).epsilon(1e-6));
}

TEST_CASE("importance weights reproduce the joint estimate prefactor") {
  // The log of the weight normalizer at the saddle equals the two main terms.
  const ShapeParams p = gkc::make_shape_params(1.0);
  for (std::int64_t d : {50, 200}) {
    const Threshold th = gkc::threshold_from_log_eps(-static_cast<double>(d));
    const gkc::SaddlePoint sp = gkc::saddle_point_for(p, th, d);
    const double log_pref =
        d * (std::log(sp.m_value) - std::log1p(-p.omega));
    const double theta = (1.0 - sp.nu) * th.abs_ln_eps2;
    CHECK(log_pref + theta ==
          doctest::Approx(gkc::joint_log_estimate(p, th, d).log_main)
              .epsilon(1e-12));
  }
}

TEST_CASE("characteristic function of the tilted summand") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  const std::complex<double> at0 = gkc::char_fn_tilted(p, th, 100, 0.0);
  CHECK(at0.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at0.imag() == doctest::Approx(0.0));
  for (double t : {-3.0, -0.7, 0.4, 1.0, 8.0})
    CHECK(std::abs(gkc::char_fn_tilted(p, th, 100, t)) <= 1.0 + 1e-12);

  // series cross-check against the geometric mixture
  const gkc::SaddlePoint sp = gkc::saddle_point_for(p, th, 100);
  const gkc::TiltedGeometric tg = gkc::make_tilted(p, sp.nu);
  const double t = 0.7;
  std::complex<double> series = 0.0;
  for (int k = 0; k <= 400; ++k)
    series += (1.0 - tg.q) * std::pow(tg.q, k) *
              std::polar(1.0, t * k * p.abs_ln_omega);
  const std::complex<double> closed = gkc::char_fn_tilted(p, th, 100, t);
  CHECK(std::abs(closed - series) < 1e-10);
}

TEST_CASE("ks distance to the normal limit shrinks with dimension") {
  // the normal limit needs the tolerance to tighten with d: eps = e^{-sqrt(d)}
  const ShapeParams p = gkc::make_shape_params(1.0);
  const double ks25 =
      gkc::clt_ks_distance(p, gkc::threshold_from_log_eps(-5.0), 25, 10000,
                           12345);
  const double ks400 =
      gkc::clt_ks_distance(p, gkc::threshold_from_log_eps(-20.0), 400, 10000,
                           12345);
  CHECK(ks400 < ks25);
  CHECK(ks400 < 0.08);
}

TEST_CASE("ks distance sees the lattice structure in one dimension") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(std::exp(-1.0));
  CHECK(gkc::clt_ks_distance(p, th, 1, 10000, 7) > 0.05);
}

TEST_CASE("ks distance rejects undersized runs") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  CHECK_THROWS_AS(gkc::clt_ks_distance(p, th, 25, 9999, 1),
                  std::invalid_argument);
}

TEST_CASE("standardized tilted sums center correctly") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const Threshold th = gkc::make_threshold(0.1);
  const std::int64_t d = 25;
  const gkc::SaddlePoint sp = gkc::saddle_point_for(p, th, d);
  const gkc::TiltedGeometric tg = gkc::make_tilted(p, sp.nu);
  const gkc::CltParams cp = gkc::clt_params(p, th, d);
  gkc::SplitMix64 rng = gkc::block_stream(99, 0);
  const int n = 100000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::int64_t j = 0; j < d; ++j)
      s += static_cast<double>(gkc::sample_tilted(tg, rng)) * p.abs_ln_omega;
    acc += (s - cp.mean) / cp.stddev;
  }
  CHECK(std::abs(acc / n) <= 4.0 / std::sqrt(static_cast<double>(n)));
}
