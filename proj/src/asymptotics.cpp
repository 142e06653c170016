#include "gkc/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkc {

Mgf mgf(const ShapeParams& p, double nu) {
  if (!(nu < 1.0)) throw std::domain_error("nu must be < 1");
  const double w = p.abs_ln_omega;
  const double e = std::exp(-(1.0 - nu) * w);   // omega^(1-nu)
  const double denom = -std::expm1(-(1.0 - nu) * w);  // 1 - omega^(1-nu)
  const double om1 = 1.0 - p.omega;
  Mgf out;
  out.value = om1 / denom;
  out.d1 = om1 * w * e / (denom * denom);
  out.d2 = om1 * w * w * (1.0 + e) * e / (denom * denom * denom);
  return out;
}

SaddlePoint saddle_point(const ShapeParams& p, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("alpha must be positive and finite");
  const double c = p.c_omega;
  SaddlePoint sp;
  sp.nu = 1.0 - c * std::log1p(1.0 / (c * alpha));
  sp.alpha = alpha;
  sp.m_value = (1.0 - p.omega) * (1.0 + c * alpha);
  sp.tilted_mean = alpha;
  sp.tilted_var = p.abs_ln_omega * (1.0 + c * alpha) * alpha;

  const Mgf g = mgf(p, sp.nu);
  if (std::abs(g.d1 / g.value - alpha) > 1e-10 * alpha)
    throw std::logic_error("saddle point stationarity check failed");
  return sp;
}

SaddlePoint saddle_point_for(const ShapeParams& p, const Threshold& th,
                             std::int64_t d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  return saddle_point(p, th.abs_ln_eps2 / static_cast<double>(d));
}

double tilted_sum_pmf(const ShapeParams& p, const Threshold& th,
                      std::int64_t d, std::int64_t m) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  if (m < 0) throw std::domain_error("m must be >= 0");
  const double x = p.c_omega * th.abs_ln_eps2 / static_cast<double>(d);
  double lp = log_binomial(m + d - 1, m) -
              static_cast<double>(d) * std::log1p(x);
  if (m > 0)
    lp += static_cast<double>(m) * (std::log(x) - std::log1p(x));
  return std::exp(lp);
}

double poisson_limit_pmf(const ShapeParams& p, const Threshold& th,
                         std::int64_t m) {
  if (m < 0) throw std::domain_error("m must be >= 0");
  const double intensity = p.c_omega * th.abs_ln_eps2;
  double lp = -intensity - std::lgamma(static_cast<double>(m + 1));
  if (m > 0) lp += static_cast<double>(m) * std::log(intensity);
  return std::exp(lp);
}

AsymptoticEstimate fixed_eps_estimate(const ShapeParams& p, const Threshold& th,
                                      std::int64_t d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  const auto N = static_cast<double>(cutoff_degree(p, th).n_omega);
  const double ld = std::log(static_cast<double>(d));
  return AsymptoticEstimate{N * ld - std::lgamma(N + 1.0),
                            std::exp((N - 1.0) * ld), "asymptotic-t1"};
}

AsymptoticEstimate joint_log_estimate(const ShapeParams& p, const Threshold& th,
                                      std::int64_t d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  const double a = th.abs_ln_eps2;
  const double ca = p.c_omega * a;
  const double dd = static_cast<double>(d);
  const double log_main = dd * std::log1p(ca / dd) + ca * std::log1p(dd / ca);
  return AsymptoticEstimate{log_main, a * std::log1p(dd / ca),
                            "asymptotic-t2"};
}

double qpt_bound_log(const ShapeParams& p, const Threshold& th,
                     std::int64_t d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  const double log_inv_eps = 0.5 * th.abs_ln_eps2;
  return 2.0 * p.c_omega * (1.0 + std::log(static_cast<double>(d))) *
         (1.0 + log_inv_eps);
}

CltParams clt_params(const ShapeParams& p, const Threshold& th,
                     std::int64_t d) {
  const SaddlePoint sp = saddle_point_for(p, th, d);
  return CltParams{th.abs_ln_eps2,
                   std::sqrt(static_cast<double>(d) * sp.tilted_var)};
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

}  // namespace gkc
