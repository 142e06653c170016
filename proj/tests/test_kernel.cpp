#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gkc/kernel.hpp"
#include "gkc/quadrature.hpp"

using gkc::EigenIndex;
using gkc::ShapeParams;

namespace {

// Reference Hermite-function evaluation through the physicists' polynomial
// recurrence; usable only for small k before the factorials overflow.
double naive_eigenfunction(const ShapeParams& p, int k, double t) {
  const double g2 = p.gamma * p.gamma;
  const double root = std::sqrt(1.0 + 4.0 * g2);
  const double x = std::pow(1.0 + 4.0 * g2, 0.25) * t;
  double h_prev = 1.0, h_cur = 2.0 * x;
  if (k == 1) h_cur = h_prev;
  for (int j = 1; j + 1 < k; ++j) {
    const double h_next = 2.0 * x * h_cur - 2.0 * j * h_prev;
    h_prev = h_cur;
    h_cur = h_next;
  }
  double fact = 1.0;
  for (int j = 2; j < k; ++j) fact *= j;
  const double norm =
      std::sqrt(std::sqrt(root) / (std::pow(2.0, k - 1) * fact));
  const double gauss = std::exp(-2.0 * g2 * t * t / (1.0 + root));
  return norm * gauss * (k == 1 ? 1.0 : h_cur);
}

}  // namespace

TEST_CASE("shape parameters at gamma = 1") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  CHECK(p.gamma == 1.0);
  CHECK(p.omega == doctest::Approx(0.3819660112501051518).epsilon(1e-15));
  CHECK(p.omega == doctest::Approx(0.5 * (3.0 - std::sqrt(5.0))).epsilon(1e-15));
  CHECK(p.abs_ln_omega ==
        doctest::Approx(0.962423650119206895).epsilon(1e-15));
  CHECK(p.c_omega == doctest::Approx(1.0390434606175137688).epsilon(1e-15));
  CHECK(p.c_omega * p.abs_ln_omega == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("shape parameters at other gamma values") {
  CHECK(gkc::make_shape_params(2.0).omega ==
        doctest::Approx(0.60961179679779243127).epsilon(1e-15));
  CHECK(gkc::make_shape_params(0.5).omega ==
        doctest::Approx(0.1715728752538099024).epsilon(1e-15));
  CHECK(gkc::make_shape_params(1e-6).omega < 1e-11);
  CHECK(gkc::make_shape_params(1e-6).omega > 0.0);
}

TEST_CASE("omega increases with gamma and stays in (0, 1)") {
  double prev = 0.0;
  for (double g : {0.1, 0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    const double w = gkc::make_shape_params(g).omega;
    CHECK(w > prev);
    CHECK(w < 1.0);
    prev = w;
  }
}

TEST_CASE("invalid gamma is rejected") {
  CHECK_THROWS_WITH_AS(gkc::make_shape_params(0.0), "gamma must be positive",
                       std::domain_error);
  CHECK_THROWS_AS(gkc::make_shape_params(-1.0), std::domain_error);
  CHECK_THROWS_AS(gkc::make_shape_params(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(
      gkc::make_shape_params(std::numeric_limits<double>::infinity()),
      std::domain_error);
}

TEST_CASE("eigenvalues form the geometric sequence (1-omega) omega^(k-1)") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  CHECK(gkc::eigenvalue(p, EigenIndex(1)) ==
        doctest::Approx(0.6180339887498948482).epsilon(1e-15));
  CHECK(gkc::eigenvalue(p, EigenIndex(3)) ==
        doctest::Approx(0.6180339887498948482 * p.omega * p.omega)
            .epsilon(1e-14));
  CHECK_THROWS_WITH_AS(EigenIndex(0), "eigen index must be >= 1",
                       std::domain_error);
  CHECK_THROWS_AS(EigenIndex(-2), std::domain_error);
}

TEST_CASE("eigenvalues sum to a unit trace") {
  const ShapeParams p = gkc::make_shape_params(1.3);
  double sum = 0.0;
  for (int k = 1; k <= 40; ++k) sum += gkc::eigenvalue(p, EigenIndex(k));
  CHECK(sum == doctest::Approx(1.0 - std::pow(p.omega, 40)).epsilon(1e-12));
  CHECK(sum < 1.0);
}

TEST_CASE("log eigenvalue matches the direct value where it does not underflow") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  for (int k : {1, 2, 10, 100, 700}) {
    const double lv = gkc::log_eigenvalue(p, EigenIndex(k));
    CHECK(lv == doctest::Approx(std::log(gkc::eigenvalue(p, EigenIndex(k))))
                    .epsilon(1e-12));
  }
  // Far beyond double range the log form keeps working.
  CHECK(gkc::eigenvalue(p, EigenIndex(100000)) == 0.0);
  CHECK(gkc::log_eigenvalue(p, EigenIndex(100000)) ==
        doctest::Approx(std::log1p(-p.omega) - 99999.0 * p.abs_ln_omega)
            .epsilon(1e-15));
}

TEST_CASE("tensor eigenvalue accumulates in the log domain") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const std::vector<std::int64_t> zero2{0, 0};
  CHECK(gkc::tensor_eigenvalue_log(p, zero2) ==
        doctest::Approx(2.0 * std::log1p(-p.omega)).epsilon(1e-15));
  const std::vector<std::int64_t> ones{1, 1};
  CHECK(gkc::tensor_eigenvalue_log(p, ones) ==
        doctest::Approx(-2.887270950357620685).epsilon(1e-14));
  // Only the total degree matters.
  const std::vector<std::int64_t> a{1, 0, 2};
  const std::vector<std::int64_t> b{0, 3, 0};
  CHECK(gkc::tensor_eigenvalue_log(p, a) == gkc::tensor_eigenvalue_log(p, b));
  CHECK_THROWS_AS(gkc::tensor_eigenvalue_log(p, std::vector<std::int64_t>{}),
                  std::domain_error);
  const std::vector<std::int64_t> neg{1, -1};
  CHECK_THROWS_AS(gkc::tensor_eigenvalue_log(p, neg), std::domain_error);
}

TEST_CASE("eigenfunction point values") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  CHECK(gkc::eigenfunction_eval(p, EigenIndex(1), 0.0) ==
        doctest::Approx(1.2228445449938518419).epsilon(1e-15));
  CHECK(gkc::eigenfunction_eval(p, EigenIndex(2), 0.0) == 0.0);
  CHECK(gkc::eigenfunction_eval(p, EigenIndex(5), 0.7) ==
        doctest::Approx(-0.98578174462390689446).epsilon(1e-13));
}

TEST_CASE("eigenfunction recurrence matches a naive Hermite evaluation") {
  for (double g : {0.5, 1.0, 2.0}) {
    const ShapeParams p = gkc::make_shape_params(g);
    for (int k = 1; k <= 10; ++k) {
      for (double t : {-2.3, -1.0, -0.33, 0.0, 0.5, 1.7}) {
        const double ref = naive_eigenfunction(p, k, t);
        const double got = gkc::eigenfunction_eval(p, EigenIndex(k), t);
        CHECK(got == doctest::Approx(ref).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("eigenfunctions at large index stay finite") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  for (double t : {0.0, 0.5, 3.0, 8.0}) {
    const double v = gkc::eigenfunction_eval(p, EigenIndex(500), t);
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("kernel evaluation") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const std::vector<double> t1{1.0}, s1{0.0};
  CHECK(gkc::kernel_eval(p, t1, t1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gkc::kernel_eval(p, t1, s1) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  const std::vector<double> t2{1.0, -0.4}, s2{0.0, 0.3};
  const std::vector<double> ta{1.0}, sa{0.0}, tb{-0.4}, sb{0.3};
  CHECK(gkc::kernel_eval(p, t2, s2) ==
        doctest::Approx(gkc::kernel_eval(p, ta, sa) *
                        gkc::kernel_eval(p, tb, sb))
            .epsilon(1e-15));
  const std::vector<double> bad{1.0, 2.0};
  CHECK_THROWS_AS(gkc::kernel_eval(p, t1, bad), std::domain_error);
  CHECK_THROWS_AS(gkc::kernel_eval(p, std::vector<double>{},
                                   std::vector<double>{}),
                  std::domain_error);
}

TEST_CASE("gauss-hermite rule basics") {
  const auto r1 = gkc::gauss_hermite(1);
  REQUIRE(r1.nodes.size() == 1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)));
  const auto r = gkc::gauss_hermite(64);
  REQUIRE(r.nodes.size() == 64);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  CHECK(wsum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    CHECK(r.nodes[i] == -r.nodes[r.nodes.size() - 1 - i]);
    CHECK(r.weights[i] ==
          doctest::Approx(r.weights[r.nodes.size() - 1 - i]).epsilon(1e-15));
    if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
  }
  CHECK_THROWS_AS(gkc::gauss_hermite(0), std::domain_error);
}

TEST_CASE("gauss-hermite integrates low moments exactly") {
  const auto r = gkc::gauss_hermite(5);
  const double rt_pi = std::sqrt(std::numbers::pi);
  for (int power : {0, 2, 4, 6}) {
    double integral = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      integral += r.weights[i] * std::pow(r.nodes[i], power);
    // moments of exp(-x^2): sqrt(pi) * (power-1)!! / 2^(power/2)
    double ref = rt_pi;
    for (int j = 1; j < power; j += 2) ref *= 0.5 * j;
    CHECK(integral == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("eigen equation holds under quadrature") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const std::vector<double> pts{0.0, 0.5, 1.0};
  for (int k = 1; k <= 10; ++k)
    CHECK(gkc::verify_eigen_equation(p, EigenIndex(k), pts, 64) < 1e-8);
}

TEST_CASE("eigen equation residual shrinks as the rule refines") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const std::vector<double> pts{0.0, 0.5, 1.0, 2.0};
  const double coarse = gkc::verify_eigen_equation(p, EigenIndex(8), pts, 16);
  const double fine = gkc::verify_eigen_equation(p, EigenIndex(8), pts, 64);
  CHECK(fine <= coarse);
  CHECK(fine < 1e-10);
}

TEST_CASE("eigen equation rejects an under-resolved rule") {
  const ShapeParams p = gkc::make_shape_params(1.0);
  const std::vector<double> pts{0.0};
  CHECK_THROWS_AS(gkc::verify_eigen_equation(p, EigenIndex(5), pts, 8),
                  std::invalid_argument);
}
