#include "gkc/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gkc {

namespace {

void check_d(std::int64_t d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
}

// C(M + d, d) = prod_{i=1..d} (M + i)/i, exact at every step since each
// prefix is itself a binomial.
mpz_class cumulative_count(std::int64_t d, const mpz_class& M) {
  mpz_class c = 1;
  for (std::int64_t i = 1; i <= d; ++i) {
    c *= M + i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return c;
}

}  // namespace

Threshold make_threshold(double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::domain_error("eps must be in (0, 1)");
  return Threshold{eps, -2.0 * std::log(eps)};
}

Threshold threshold_from_log_eps(double log_eps) {
  if (!(log_eps < 0.0) || !std::isfinite(log_eps))
    throw std::domain_error("log eps must be negative and finite");
  // exp underflows to 0 below about -745; abs_ln_eps2 stays exact either way
  return Threshold{std::exp(log_eps), -2.0 * log_eps};
}

CutoffDegree cutoff_degree(const ShapeParams& p, const Threshold& th) {
  const double a = th.abs_ln_eps2;
  const double w = p.abs_ln_omega;
  auto n = static_cast<std::int64_t>(std::floor(a / w));
  // The division is only a hint; settle the boundary with the product form.
  while (n > 0 && !(static_cast<double>(n) * w < a)) --n;
  while (static_cast<double>(n + 1) * w < a) ++n;

  bool boundary = false;
  for (std::int64_t m : {n, n + 1}) {
    const double lhs = static_cast<double>(m) * w;
    const double scale = std::max(lhs, a);
    if (std::abs(lhs - a) <= 4.0 * std::numeric_limits<double>::epsilon() * scale)
      boundary = true;
  }
  return CutoffDegree{n, boundary};
}

CountResult exact_count(const ShapeParams& p, const Threshold& th,
                        std::int64_t d) {
  check_d(d);
  const std::int64_t N = cutoff_degree(p, th).n_omega;
  mpz_class term = 1;  // C(m + d - 1, d - 1), starting at m = 0
  mpz_class total = 1;
  for (std::int64_t m = 1; m <= N; ++m) {
    term *= static_cast<unsigned long>(m + d - 1);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(),
                    static_cast<unsigned long>(m));
    total += term;
  }
  const double lv = log_mpz(total);
  return CountResult{total, lv, CountResult::Method::exact_enum};
}

CountResult log_count(const ShapeParams& p, const Threshold& th,
                      std::int64_t d) {
  check_d(d);
  const std::int64_t N = cutoff_degree(p, th).n_omega;
  // Online log-sum-exp over ln C(m+d-1, d-1), built incrementally:
  // the m-th log term adds log((m+d-1)/m).
  double lb = 0.0;
  double mx = 0.0;
  double acc = 1.0;
  for (std::int64_t m = 1; m <= N; ++m) {
    lb += std::log1p(static_cast<double>(d - 1) / static_cast<double>(m));
    if (lb <= mx) {
      acc += std::exp(lb - mx);
    } else {
      acc = acc * std::exp(mx - lb) + 1.0;
      mx = lb;
    }
  }
  return CountResult{std::nullopt, mx + std::log(acc),
                     CountResult::Method::log_domain};
}

CountResult brute_force_count(const ShapeParams& p, const Threshold& th,
                              int d) {
  check_d(d);
  const std::int64_t N = cutoff_degree(p, th).n_omega;
  if (d > 6 || N > 30)
    throw std::length_error(
        "brute force guard: requires d <= 6 and N_omega <= 30");

  const std::int64_t limit = N + 1;
  struct Entry {
    std::int64_t degree;
    double log_lambda;
  };
  std::vector<Entry> entries;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(d), 0);
  std::function<void(int, std::int64_t)> emit = [&](int pos, std::int64_t used) {
    if (pos == d) {
      entries.push_back(Entry{used, tensor_eigenvalue_log(p, idx)});
      return;
    }
    for (std::int64_t v = 0; v + used <= limit; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      emit(pos + 1, used + v);
    }
  };
  emit(0, 0);

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.degree < b.degree; });

  const std::vector<std::int64_t> zero(static_cast<std::size_t>(d), 0);
  const double log_threshold =
      2.0 * std::log(th.eps) + tensor_eigenvalue_log(p, zero);
  mpz_class count = 0;
  for (const Entry& e : entries) {
    if (!(e.log_lambda > log_threshold)) break;
    ++count;
  }
  return CountResult{count, log_mpz(count),
                     CountResult::Method::brute_force};
}

mpz_class rank_to_degree(std::int64_t d, const mpz_class& j) {
  check_d(d);
  if (j < 1) throw std::domain_error("rank must be >= 1");
  if (j == 1) return 0;
  mpz_class hi = 1;
  while (cumulative_count(d, hi) < j) hi *= 2;
  mpz_class lo = 0;
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (cumulative_count(d, mid) >= j)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

double log_minimal_error(const ShapeParams& p, std::int64_t d,
                         const mpz_class& n) {
  check_d(d);
  if (n < 0) throw std::domain_error("n must be >= 0");
  const mpz_class degree = rank_to_degree(d, n + 1);
  const double log_lambda =
      static_cast<double>(d) * std::log1p(-p.omega) -
      mpz_get_d(degree.get_mpz_t()) * p.abs_ln_omega;
  return 0.5 * log_lambda;
}

double minimal_error(const ShapeParams& p, std::int64_t d,
                     const mpz_class& n) {
  return std::exp(log_minimal_error(p, d, n));
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) throw std::domain_error("binomial needs 0 <= k <= n");
  return std::lgamma(static_cast<double>(n + 1)) -
         std::lgamma(static_cast<double>(k + 1)) -
         std::lgamma(static_cast<double>(n - k + 1));
}

double log_mpz(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("log_mpz needs a positive integer");
  signed long exp2;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

}  // namespace gkc
