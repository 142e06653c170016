#pragma once

#include <cstdint>
#include <span>

namespace gkc {

/// Derived quantities of the univariate Gaussian kernel exp(-gamma^2 (t-s)^2)
/// under the standard normal design measure. All eigen-structure of the
/// induced integral operator is geometric in `omega`.
struct ShapeParams {
  double gamma;         // shape parameter, > 0
  double omega;         // geometric ratio, in (0, 1)
  double abs_ln_omega;  // |ln omega|
  double c_omega;       // 1 / |ln omega|
};

/// Validates gamma and fills the derived fields.
/// Throws std::domain_error unless gamma is positive and finite.
ShapeParams make_shape_params(double gamma);

/// 1-based position in the nonincreasing eigenvalue sequence.
struct EigenIndex {
  explicit EigenIndex(std::int64_t k);
  std::int64_t k;
};

/// lambda_k = (1 - omega) omega^(k-1). Underflows to 0 for k beyond ~3000
/// at gamma = 1; use log_eigenvalue past that.
double eigenvalue(const ShapeParams& p, EigenIndex k);

/// ln lambda_k, exact in the exponent for any k.
double log_eigenvalue(const ShapeParams& p, EigenIndex k);

/// ln of the d-variate tensor eigenvalue for a multi-index of 0-based
/// exponents (entry j is k_j - 1): d ln(1-omega) + (sum k) ln omega.
/// Throws std::domain_error on an empty index.
double tensor_eigenvalue_log(const ShapeParams& p,
                             std::span<const std::int64_t> exponents);

/// k-th orthonormal eigenfunction at t. Uses the recurrence for
/// orthonormalized Hermite functions with the Gaussian factor folded into
/// the starting value, so intermediates stay in range for k up to 500.
double eigenfunction_eval(const ShapeParams& p, EigenIndex k, double t);

/// Tensor-product kernel exp(-gamma^2 |t - s|^2); t and s must have equal
/// nonzero length.
double kernel_eval(const ShapeParams& p, std::span<const double> t,
                   std::span<const double> s);

/// Max over t_points of |Integral[k(t,.) psi_k dmu] - lambda_k psi_k(t)|,
/// with the integral done by Gauss-Hermite quadrature of the given order.
/// Requires quad_order >= 2k so the rule resolves the integrand's degree.
double verify_eigen_equation(const ShapeParams& p, EigenIndex k,
                             std::span<const double> t_points, int quad_order);

}  // namespace gkc
