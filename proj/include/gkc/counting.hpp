#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "gkc/kernel.hpp"

namespace gkc {

/// Error demand. abs_ln_eps2 = |ln eps^2| is the authoritative field; it is
/// carried separately so thresholds like eps = e^(-d) keep an exact exponent.
struct Threshold {
  double eps;          // in (0, 1)
  double abs_ln_eps2;  // -2 ln eps, > 0
};

/// Throws std::domain_error unless eps is in (0, 1).
Threshold make_threshold(double eps);

/// Builds the threshold from ln eps directly (log_eps < 0), avoiding the
/// round trip through exp/log when eps itself would lose precision.
Threshold threshold_from_log_eps(double log_eps);

/// Largest retained total degree: max{m >= 0 : m |ln omega| < |ln eps^2|}.
/// `boundary` is set when the comparison at m or m+1 sits within 4 ulps of
/// equality, i.e. the count is one rounding away from changing.
struct CutoffDegree {
  std::int64_t n_omega;
  bool boundary;
};

CutoffDegree cutoff_degree(const ShapeParams& p, const Threshold& th);

/// A count of eigenvalues above threshold, n(d, eps). `exact` is present for
/// the integer routes; log_value is always usable and agrees with ln(exact)
/// to 1e-10 relative when both exist.
struct CountResult {
  enum class Method { exact_enum, log_domain, brute_force };
  std::optional<mpz_class> exact;
  double log_value;
  Method method;
};

/// Exact count via the cumulative stars-and-bars sum
/// sum_{m=0}^{N} C(m+d-1, d-1), accumulated with an integer ratio recurrence.
CountResult exact_count(const ShapeParams& p, const Threshold& th,
                        std::int64_t d);

/// Same sum in log domain via online log-sum-exp; for d where the exact
/// integer would be astronomically wide.
CountResult log_count(const ShapeParams& p, const Threshold& th,
                      std::int64_t d);

/// Independent oracle: enumerates every multi-index with total degree up to
/// N_omega + 1, forms the tensor log eigenvalues, sorts them nonincreasing
/// (keyed on the exact integer degree), and counts those strictly above
/// eps^2 lambda_{d,1}. Throws std::length_error unless d <= 6 and
/// N_omega <= 30.
CountResult brute_force_count(const ShapeParams& p, const Threshold& th,
                              int d);

/// Total degree of the j-th largest d-variate eigenvalue (j >= 1):
/// the smallest M with C(M+d, d) >= j.
mpz_class rank_to_degree(std::int64_t d, const mpz_class& j);

/// Worst-case error after n optimally chosen evaluations,
/// e(d, n) = sqrt(lambda_{d, n+1}), and its log companion.
double minimal_error(const ShapeParams& p, std::int64_t d, const mpz_class& n);
double log_minimal_error(const ShapeParams& p, std::int64_t d,
                         const mpz_class& n);

/// ln C(n, k) for 0 <= k <= n, via lgamma.
double log_binomial(std::int64_t n, std::int64_t k);

/// Natural log of a positive big integer, accurate to ~1 ulp.
double log_mpz(const mpz_class& n);

}  // namespace gkc
