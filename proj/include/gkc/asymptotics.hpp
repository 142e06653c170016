#pragma once

#include <cstdint>
#include <string>

#include "gkc/counting.hpp"
#include "gkc/kernel.hpp"

namespace gkc {

/// Moment generating function M(nu) = E exp(nu |ln omega| K) of one
/// geometric eigenvalue exponent, with first and second derivatives in nu.
/// Defined for nu < 1; closed form (1-omega)/(1-omega^(1-nu)).
struct Mgf {
  double value;
  double d1;
  double d2;
};

Mgf mgf(const ShapeParams& p, double nu);

/// Exponential tilt solving M'(nu)/M(nu) = alpha for a target mean alpha > 0.
/// All fields are closed-form; construction cross-checks the stationarity
/// identity to 1e-10 relative and throws std::logic_error if it fails.
struct SaddlePoint {
  double nu;           // < 1, negative for alpha below the untilted mean
  double alpha;        // prescribed per-coordinate mean
  double m_value;      // M(nu) = (1 - omega)(1 + c_omega alpha)
  double tilted_mean;  // equals alpha by construction
  double tilted_var;   // |ln omega| (1 + c_omega alpha) alpha
};

SaddlePoint saddle_point(const ShapeParams& p, double alpha);

/// Saddle point at the complexity scale alpha = |ln eps^2| / d.
SaddlePoint saddle_point_for(const ShapeParams& p, const Threshold& th,
                             std::int64_t d);

/// P(S = m |ln omega|) for the saddle-tilted sum S of d exponent draws:
/// a negative binomial over total degree m, evaluated in log domain.
double tilted_sum_pmf(const ShapeParams& p, const Threshold& th,
                      std::int64_t d, std::int64_t m);

/// Poisson(c_omega |ln eps^2|) pmf at m, the d -> infinity limit of
/// tilted_sum_pmf.
double poisson_limit_pmf(const ShapeParams& p, const Threshold& th,
                         std::int64_t m);

/// One term of a complexity expansion: ln(main term), plus the scale the
/// remainder is measured against.
struct AsymptoticEstimate {
  double log_main;
  double residual_scale;
  std::string label;
};

/// Fixed-eps, large-d expansion: main term d^N / N! with N = N_omega(eps);
/// remainder is O(d^(N-1)).
AsymptoticEstimate fixed_eps_estimate(const ShapeParams& p, const Threshold& th,
                                      std::int64_t d);

/// Joint d, eps regime on the log scale:
/// ln n ~ d ln(1 + c a / d) + c a ln(1 + d / (c a)) with a = |ln eps^2|,
/// c = c_omega; remainder is o(a ln(1 + d / (c a))).
AsymptoticEstimate joint_log_estimate(const ShapeParams& p, const Threshold& th,
                                      std::int64_t d);

/// ln of the quasi-polynomial tractability diagnostic
/// 2 c_omega (1 + ln d)(1 + ln(1/eps)).
double qpt_bound_log(const ShapeParams& p, const Threshold& th, std::int64_t d);

/// Centering a_d = |ln eps^2| and spread b_d = sqrt(d * tilted_var) for the
/// standardized tilted sum (S - a_d) / b_d.
struct CltParams {
  double mean;
  double stddev;
};

CltParams clt_params(const ShapeParams& p, const Threshold& th, std::int64_t d);

/// Standard normal CDF via erfc.
double normal_cdf(double x);

}  // namespace gkc
