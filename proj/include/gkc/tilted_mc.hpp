#pragma once

#include <complex>
#include <cstdint>

#include "gkc/counting.hpp"
#include "gkc/kernel.hpp"
#include "gkc/rng.hpp"

namespace gkc {

/// Geometric law on {0, 1, 2, ...} tilted by exp(nu |ln omega| k):
/// P(k) = (1 - q) q^k with q = omega^(1 - nu).
struct TiltedGeometric {
  double nu;
  double log_q;  // (1 - nu) ln omega, < 0
  double q;
};

/// Requires nu < 1 (else the tilted mass is not summable).
TiltedGeometric make_tilted(const ShapeParams& p, double nu);

/// One draw by inverse transform: floor(ln U / ln q).
std::uint64_t sample_tilted(const TiltedGeometric& tg, SplitMix64& rng);

/// Importance-sampling estimate of a count. Linear-domain fields may
/// overflow to inf for large d; log_point and rel_std_error stay finite.
struct McEstimate {
  double point;          // exp(log_point)
  double log_point;      // ln of the estimate; -inf if every draw rejected
  double std_error;      // standard error of `point`
  double rel_std_error;  // std_error / point, also the sd of log_point
  std::uint64_t samples;
  std::uint64_t seed;
};

/// Estimates n(d, eps) by sampling d tilted-geometric exponents at the
/// saddle tilt and averaging exp(theta S) over draws with S < |ln eps^2|,
/// theta = c_omega ln(1 + d / (c_omega |ln eps^2|)); the deterministic
/// prefactor (1 + c_omega |ln eps^2| / d)^d multiplies the average.
/// Fixed block size; same (samples, seed) gives bit-identical results for
/// any thread count.
McEstimate estimate_count(const ShapeParams& p, const Threshold& th,
                          std::int64_t d, std::uint64_t samples,
                          std::uint64_t seed, int threads = 1);

/// Same estimator at an arbitrary tilt nu < 1, weighting each draw by
/// exp((1 - nu) S) / M(nu)^d on the accepted event. nu = 0 is plain
/// rejection counting; the default above is the variance-reducing choice.
McEstimate estimate_count_with_tilt(const ShapeParams& p, const Threshold& th,
                                    std::int64_t d, double nu,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int threads = 1);

/// Characteristic function of one tilted summand against the saddle family:
/// h(t) = 1 / (1 - (c_omega |ln eps^2| / d)(e^{i t |ln omega|} - 1)).
std::complex<double> char_fn_tilted(const ShapeParams& p, const Threshold& th,
                                    std::int64_t d, double t);

/// Kolmogorov-Smirnov distance between the empirical law of the
/// standardized tilted sum (S - a_d) / b_d and the standard normal.
/// Requires samples >= 10000.
double clt_ks_distance(const ShapeParams& p, const Threshold& th,
                       std::int64_t d, std::uint64_t samples,
                       std::uint64_t seed);

}  // namespace gkc
