#include "gkc/tilted_mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gkc/asymptotics.hpp"

namespace gkc {

namespace {

constexpr std::uint64_t kBlock = 4096;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct BlockStats {
  double mx = kNegInf;  // max weight exponent seen in the block
  double s1 = 0.0;      // sum of exp(e - mx)
  double s2 = 0.0;      // sum of exp(2(e - mx))
};

// One block of draws. Accumulation is max-shifted so weights spanning
// hundreds of orders of magnitude stay representable.
BlockStats run_block(const ShapeParams& p, const Threshold& th, std::int64_t d,
                     const TiltedGeometric& tg, double coeff,
                     std::uint64_t seed, std::uint64_t block,
                     std::uint64_t n_draws) {
  SplitMix64 rng = block_stream(seed, block);
  BlockStats st;
  for (std::uint64_t i = 0; i < n_draws; ++i) {
    std::uint64_t total = 0;
    for (std::int64_t j = 0; j < d; ++j) total += sample_tilted(tg, rng);
    const double s = static_cast<double>(total) * p.abs_ln_omega;
    if (!(s < th.abs_ln_eps2)) continue;
    const double e = coeff * s;
    if (e > st.mx) {
      const double r = st.mx == kNegInf ? 0.0 : std::exp(st.mx - e);
      st.s1 = st.s1 * r + 1.0;
      st.s2 = st.s2 * r * r + 1.0;
      st.mx = e;
    } else {
      const double r = std::exp(e - st.mx);
      st.s1 += r;
      st.s2 += r * r;
    }
  }
  return st;
}

// Importance sampling of a lattice count: estimate = exp(log_pref) times the
// sample mean of exp(coeff * S) on the event S < |ln eps^2|.
McEstimate run_estimator(const ShapeParams& p, const Threshold& th,
                         std::int64_t d, double nu, double coeff,
                         double log_pref, std::uint64_t samples,
                         std::uint64_t seed, int threads) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  if (samples < 100) throw std::invalid_argument("samples must be >= 100");
  const TiltedGeometric tg = make_tilted(p, nu);

  const std::uint64_t n_blocks = (samples + kBlock - 1) / kBlock;
  std::vector<BlockStats> stats(n_blocks);
  auto worker_count = static_cast<std::uint64_t>(std::max(threads, 1));
  worker_count = std::min<std::uint64_t>(worker_count, n_blocks);
  auto block_draws = [&](std::uint64_t b) {
    return b + 1 < n_blocks ? kBlock : samples - b * kBlock;
  };
  if (worker_count <= 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b)
      stats[b] = run_block(p, th, d, tg, coeff, seed, b, block_draws(b));
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < n_blocks; b += worker_count)
          stats[b] = run_block(p, th, d, tg, coeff, seed, b, block_draws(b));
      });
    }
    for (auto& t : pool) t.join();
  }

  // Merge in block order (fixed regardless of the thread layout), with
  // compensated sums.
  double mx = kNegInf;
  for (const BlockStats& st : stats) mx = std::max(mx, st.mx);

  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  if (mx == kNegInf) {  // every draw rejected
    out.point = 0.0;
    out.log_point = kNegInf;
    out.std_error = 0.0;
    out.rel_std_error = 0.0;
    return out;
  }
  double s1 = 0.0, c1 = 0.0, s2 = 0.0, c2 = 0.0;
  auto add = [](double& sum, double& comp, double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };
  for (const BlockStats& st : stats) {
    if (st.mx == kNegInf) continue;
    const double r = std::exp(st.mx - mx);
    add(s1, c1, st.s1 * r);
    add(s2, c2, st.s2 * r * r);
  }
  s1 += c1;
  s2 += c2;

  const double n = static_cast<double>(samples);
  const double mean = s1 / n;
  const double var_mean =
      std::max(0.0, (s2 - s1 * s1 / n) / (n - 1.0) / n);
  const double sd_mean = std::sqrt(var_mean);

  out.log_point = log_pref + mx + std::log(mean);
  out.point = std::exp(out.log_point);
  out.rel_std_error = sd_mean / mean;
  out.std_error = sd_mean == 0.0 ? 0.0 : std::exp(log_pref + mx + std::log(sd_mean));
  return out;
}

}  // namespace

TiltedGeometric make_tilted(const ShapeParams& p, double nu) {
  if (!(nu < 1.0)) throw std::domain_error("nu must be < 1");
  const double log_q = -(1.0 - nu) * p.abs_ln_omega;
  return TiltedGeometric{nu, log_q, std::exp(log_q)};
}

std::uint64_t sample_tilted(const TiltedGeometric& tg, SplitMix64& rng) {
  const double u = rng.next_unit_open();
  return static_cast<std::uint64_t>(std::log(u) / tg.log_q);
}

McEstimate estimate_count(const ShapeParams& p, const Threshold& th,
                          std::int64_t d, std::uint64_t samples,
                          std::uint64_t seed, int threads) {
  const SaddlePoint sp = saddle_point_for(p, th, d);
  const double a = th.abs_ln_eps2;
  const double ca = p.c_omega * a;
  const double dd = static_cast<double>(d);
  const double coeff = p.c_omega * std::log1p(dd / ca);
  const double log_pref = dd * std::log1p(ca / dd);
  return run_estimator(p, th, d, sp.nu, coeff, log_pref, samples, seed,
                       threads);
}

McEstimate estimate_count_with_tilt(const ShapeParams& p, const Threshold& th,
                                    std::int64_t d, double nu,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int threads) {
  const Mgf g = mgf(p, nu);
  const double log_pref =
      static_cast<double>(d) * (std::log(g.value) - std::log1p(-p.omega));
  return run_estimator(p, th, d, nu, 1.0 - nu, log_pref, samples, seed,
                       threads);
}

std::complex<double> char_fn_tilted(const ShapeParams& p, const Threshold& th,
                                    std::int64_t d, double t) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  const double x = p.c_omega * th.abs_ln_eps2 / static_cast<double>(d);
  const std::complex<double> z =
      std::polar(1.0, t * p.abs_ln_omega) - std::complex<double>(1.0, 0.0);
  return 1.0 / (std::complex<double>(1.0, 0.0) - x * z);
}

double clt_ks_distance(const ShapeParams& p, const Threshold& th,
                       std::int64_t d, std::uint64_t samples,
                       std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("samples must be >= 10000");
  const SaddlePoint sp = saddle_point_for(p, th, d);
  const CltParams cp = clt_params(p, th, d);
  const TiltedGeometric tg = make_tilted(p, sp.nu);

  std::vector<double> xs(samples);
  const std::uint64_t n_blocks = (samples + kBlock - 1) / kBlock;
  for (std::uint64_t b = 0; b < n_blocks; ++b) {
    SplitMix64 rng = block_stream(seed, b);
    const std::uint64_t lo = b * kBlock;
    const std::uint64_t hi = std::min(lo + kBlock, samples);
    for (std::uint64_t i = lo; i < hi; ++i) {
      std::uint64_t total = 0;
      for (std::int64_t j = 0; j < d; ++j) total += sample_tilted(tg, rng);
      xs[i] =
          (static_cast<double>(total) * p.abs_ln_omega - cp.mean) / cp.stddev;
    }
  }
  std::sort(xs.begin(), xs.end());

  double ks = 0.0;
  const double n = static_cast<double>(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double f = normal_cdf(xs[i]);
    ks = std::max(ks, std::max(f - static_cast<double>(i) / n,
                               static_cast<double>(i + 1) / n - f));
  }
  return ks;
}

}  // namespace gkc
