// Command-line surface for the complexity library: parameter queries, counts
// by any method, sweep tables, pmf/CLT reports, and the verification suites.
#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gkc/asymptotics.hpp"
#include "gkc/counting.hpp"
#include "gkc/kernel.hpp"
#include "gkc/tilted_mc.hpp"
#include "gkc/verify.hpp"

namespace {

using gkc::CountResult;
using gkc::ShapeParams;
using gkc::Threshold;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt_double17(double v) {
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool color_enabled() {
  return isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

// ---------------------------------------------------------------------------
// Row model shared by complexity/table/pmf/clt output.

struct Row {
  double gamma = 0.0;
  std::int64_t d = 0;
  double eps = 0.0;
  std::optional<std::int64_t> m;        // pmf rows only
  std::optional<std::uint64_t> samples; // clt rows only
  std::optional<std::uint64_t> seed;    // clt rows only
  std::string method;
  std::string value_kind;
  std::string value;  // rendered numeric (decimal integer or double)
  std::optional<double> log_value;  // companion for exact counts
  std::optional<double> stderr_v;
  std::optional<bool> boundary;
};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw std::runtime_error(std::string("internal error: non-finite ") + what);
}

std::string render_value(double v) {
  require_finite(v, "value");
  return fmt_double(v);
}

void emit_csv(const std::vector<Row>& rows, const std::vector<std::string>& header) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += header[i];
    out += i + 1 < header.size() ? ',' : '\n';
  }
  for (const Row& r : rows) {
    std::vector<std::string> cells;
    for (const std::string& h : header) {
      if (h == "gamma") cells.push_back(fmt_double(r.gamma));
      else if (h == "d") cells.push_back(std::to_string(r.d));
      else if (h == "eps") cells.push_back(fmt_double(r.eps));
      else if (h == "m") cells.push_back(std::to_string(*r.m));
      else if (h == "samples") cells.push_back(std::to_string(*r.samples));
      else if (h == "seed") cells.push_back(std::to_string(*r.seed));
      else if (h == "method") cells.push_back(r.method);
      else if (h == "value_kind") cells.push_back(r.value_kind);
      else if (h == "value") cells.push_back(r.value);
      else if (h == "stderr")
        cells.push_back(r.stderr_v ? fmt_double(*r.stderr_v) : "-");
      else if (h == "boundary_flag")
        cells.push_back(r.boundary ? (*r.boundary ? "1" : "0") : "-");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      out += i + 1 < cells.size() ? ',' : '\n';
    }
  }
  std::fputs(out.c_str(), stdout);
}

void emit_json(const std::vector<Row>& rows, const std::vector<std::string>& header) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    out += "  {";
    for (std::size_t h = 0; h < header.size(); ++h) {
      const std::string& key = header[h];
      out += "\"" + (key == "boundary_flag" ? std::string("boundary_flag") : key) + "\":";
      if (key == "gamma") out += fmt_double(r.gamma);
      else if (key == "d") out += std::to_string(r.d);
      else if (key == "eps") out += fmt_double(r.eps);
      else if (key == "m") out += std::to_string(*r.m);
      else if (key == "samples") out += std::to_string(*r.samples);
      else if (key == "seed") out += std::to_string(*r.seed);
      else if (key == "method") out += "\"" + r.method + "\"";
      else if (key == "value_kind") out += "\"" + r.value_kind + "\"";
      else if (key == "value") out += r.value;
      else if (key == "stderr")
        out += r.stderr_v ? fmt_double(*r.stderr_v) : "null";
      else if (key == "boundary_flag")
        out += r.boundary ? (*r.boundary ? "true" : "false") : "null";
      if (h + 1 < header.size()) out += ",";
    }
    if (r.log_value) out += ",\"log_value\":" + fmt_double(*r.log_value);
    out += i + 1 < rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  std::fputs(out.c_str(), stdout);
}

void emit(const std::vector<Row>& rows, const std::vector<std::string>& header,
          const std::string& format) {
  if (format == "json")
    emit_json(rows, header);
  else
    emit_csv(rows, header);
}

const std::vector<std::string> kTableHeader{
    "gamma", "d", "eps", "method", "value_kind", "value", "stderr",
    "boundary_flag"};

// ---------------------------------------------------------------------------
// Methods.

const std::vector<std::string> kMethodOrder{
    "exact", "log", "brute", "asymptotic-t1", "asymptotic-t2", "mc"};

int worker_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hc, 1u, 8u));
}

void warn_boundary(const ShapeParams& p, const Threshold& th, double gamma,
                   std::int64_t d, double eps) {
  const auto cut = gkc::cutoff_degree(p, th);
  // Report the counts on both sides of the tie.
  mpz_class at_n, at_n1;
  mpz_bin_uiui(at_n.get_mpz_t(),
               static_cast<unsigned long>(cut.n_omega + d),
               static_cast<unsigned long>(d));
  mpz_bin_uiui(at_n1.get_mpz_t(),
               static_cast<unsigned long>(cut.n_omega + 1 + d),
               static_cast<unsigned long>(d));
  std::fprintf(stderr,
               "warning: cutoff within 4 ulps of the boundary at gamma=%s d=%lld "
               "eps=%s; count is %s with N=%lld and %s with N=%lld\n",
               fmt_double(gamma).c_str(), static_cast<long long>(d),
               fmt_double(eps).c_str(), at_n.get_str().c_str(),
               static_cast<long long>(cut.n_omega), at_n1.get_str().c_str(),
               static_cast<long long>(cut.n_omega + 1));
}

Row compute_cell(const ShapeParams& p, const Threshold& th, double gamma,
                 std::int64_t d, const std::string& method,
                 std::uint64_t samples, std::uint64_t seed) {
  Row row;
  row.gamma = gamma;
  row.d = d;
  row.eps = th.eps;
  row.method = method;
  const bool counting =
      method == "exact" || method == "log" || method == "brute";
  if (counting) {
    const auto cut = gkc::cutoff_degree(p, th);
    row.boundary = cut.boundary;
    if (cut.boundary) warn_boundary(p, th, gamma, d, th.eps);
  }
  if (method == "exact" || method == "brute") {
    CountResult cr;
    if (method == "exact") {
      cr = gkc::exact_count(p, th, d);
    } else {
      if (d > 6) throw UsageError("brute force guard: requires d <= 6 and N_omega <= 30");
      cr = gkc::brute_force_count(p, th, static_cast<int>(d));
    }
    row.value_kind = "count";
    row.value = cr.exact->get_str();
    row.log_value = cr.log_value;
  } else if (method == "log") {
    row.value_kind = "log_count";
    row.value = render_value(gkc::log_count(p, th, d).log_value);
  } else if (method == "asymptotic-t1") {
    row.value_kind = "log_main";
    row.value = render_value(gkc::fixed_eps_estimate(p, th, d).log_main);
  } else if (method == "asymptotic-t2") {
    row.value_kind = "log_main";
    row.value = render_value(gkc::joint_log_estimate(p, th, d).log_main);
  } else if (method == "mc") {
    const gkc::McEstimate est =
        gkc::estimate_count(p, th, d, samples, seed, worker_threads());
    if (std::isfinite(est.point)) {
      row.value_kind = "count";
      row.value = render_value(est.point);
      row.stderr_v = est.std_error;
    } else {  // too large for a double; report on the log scale
      row.value_kind = "log_count";
      row.value = render_value(est.log_point);
      row.stderr_v = est.rel_std_error;
    }
  } else {
    throw UsageError("unknown method: " + method);
  }
  return row;
}

// ---------------------------------------------------------------------------
// Sweep configuration: plain key=value file mirroring the flags, with '#'
// comments; flags override file values.

struct EpsRule {
  std::string tag;  // exp(-d) | 1/d | exp(-sqrt(d))
};
using EpsEntry = std::variant<double, EpsRule>;

struct SweepConfig {
  std::vector<double> gammas;
  std::vector<std::int64_t> ds;
  std::vector<EpsEntry> eps_entries;
  std::vector<std::string> methods;
  std::uint64_t samples = 0;
  bool samples_set = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (std::string& item : out) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
  }
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw UsageError(where + ": bad number '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw UsageError(where + ": bad integer '" + s + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& s, const std::string& where) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw UsageError(where + ": bad integer '" + s + "'");
  return v;
}

bool is_rule_tag(const std::string& s) {
  return s == "exp(-d)" || s == "1/d" || s == "exp(-sqrt(d))";
}

void apply_key(SweepConfig& cfg, const std::string& key,
               const std::string& value, const std::string& where) {
  if (key == "gamma") {
    cfg.gammas.clear();
    for (const std::string& s : split_list(value))
      cfg.gammas.push_back(parse_double(s, where));
  } else if (key == "d") {
    cfg.ds.clear();
    for (const std::string& s : split_list(value))
      cfg.ds.push_back(parse_int(s, where));
  } else if (key == "eps") {
    cfg.eps_entries.clear();
    for (const std::string& s : split_list(value)) {
      if (is_rule_tag(s))
        cfg.eps_entries.emplace_back(EpsRule{s});
      else
        cfg.eps_entries.emplace_back(parse_double(s, where));
    }
  } else if (key == "method" || key == "methods") {
    cfg.methods = split_list(value);
    for (const std::string& m : cfg.methods)
      if (std::find(kMethodOrder.begin(), kMethodOrder.end(), m) ==
          kMethodOrder.end())
        throw UsageError(where + ": unknown method '" + m + "'");
  } else if (key == "samples") {
    cfg.samples = parse_uint(value, where);
    cfg.samples_set = true;
  } else if (key == "seed") {
    cfg.seed = parse_uint(value, where);
    cfg.seed_set = true;
  } else {
    throw UsageError(where + ": unknown key '" + key + "'");
  }
}

void load_config_file(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = path + ": line " + std::to_string(lineno);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(where + ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto kb = key.find_last_not_of(" \t");
    key = key.substr(0, kb == std::string::npos ? 0 : kb + 1);
    const auto vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? "" : value.substr(vb);
    apply_key(cfg, key, value, where);
  }
}

Threshold resolve_eps(const EpsEntry& entry, std::int64_t d) {
  if (const double* v = std::get_if<double>(&entry))
    return gkc::make_threshold(*v);
  const std::string& tag = std::get<EpsRule>(entry).tag;
  const double dd = static_cast<double>(d);
  if (tag == "exp(-d)") return gkc::threshold_from_log_eps(-dd);
  if (tag == "exp(-sqrt(d))")
    return gkc::threshold_from_log_eps(-std::sqrt(dd));
  return gkc::make_threshold(1.0 / dd);  // "1/d"
}

std::vector<Row> run_sweep(const SweepConfig& cfg) {
  std::vector<double> gammas = cfg.gammas;
  std::vector<std::int64_t> ds = cfg.ds;
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<std::string> methods;
  for (const std::string& m : kMethodOrder)
    if (std::find(cfg.methods.begin(), cfg.methods.end(), m) !=
        cfg.methods.end())
      methods.push_back(m);

  const bool wants_mc =
      std::find(methods.begin(), methods.end(), "mc") != methods.end();
  if (wants_mc && (!cfg.samples_set || !cfg.seed_set))
    throw UsageError("method mc requires --samples and --seed");

  std::vector<Row> rows;
  for (double g : gammas) {
    const ShapeParams p = gkc::make_shape_params(g);
    for (std::int64_t d : ds) {
      if (d < 1) throw UsageError("d must be >= 1");
      std::vector<Threshold> ths;
      for (const EpsEntry& entry : cfg.eps_entries)
        ths.push_back(resolve_eps(entry, d));
      std::sort(ths.begin(), ths.end(),
                [](const Threshold& x, const Threshold& y) {
                  return x.abs_ln_eps2 > y.abs_ln_eps2;  // eps ascending
                });
      ths.erase(std::unique(ths.begin(), ths.end(),
                            [](const Threshold& x, const Threshold& y) {
                              return x.abs_ln_eps2 == y.abs_ln_eps2;
                            }),
                ths.end());
      for (const Threshold& th : ths)
        for (const std::string& m : methods)
          rows.push_back(
              compute_cell(p, th, g, d, m, cfg.samples, cfg.seed));
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, int quad_order) {
  gkc::VerifyOptions opts;
  opts.quad_order = quad_order;
  gkc::SuiteReport rep;
  try {
    rep = gkc::run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  const bool color = color_enabled();
  const char* green = color ? "\x1b[32m" : "";
  const char* red = color ? "\x1b[31m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  int passed = 0;
  for (const gkc::CheckResult& c : rep.checks) {
    if (c.pass) ++passed;
    std::printf("%s[%s]%s %s: %s\n    %s\n", c.pass ? green : red,
                c.pass ? "PASS" : "FAIL", reset, rep.suite.c_str(),
                c.name.c_str(), c.detail.c_str());
  }
  std::printf("suite %s: %d/%zu checks passed\n", rep.suite.c_str(), passed,
              rep.checks.size());
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"worst-case information complexity of Gaussian-kernel "
               "approximation: exact counts, asymptotics, Monte Carlo"};
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // params
  auto* sc_params = app.add_subcommand("params", "derived shape parameters");
  double pa_gamma = 0.0;
  sc_params->add_option("--gamma", pa_gamma, "shape parameter")->required();

  // complexity
  auto* sc_cx = app.add_subcommand("complexity", "n(d, eps) by one method");
  double cx_gamma = 0.0, cx_eps = 0.0;
  std::int64_t cx_d = 0;
  std::string cx_method = "exact";
  std::uint64_t cx_samples = 0, cx_seed = 0;
  sc_cx->add_option("--gamma", cx_gamma)->required();
  sc_cx->add_option("--eps", cx_eps)->required();
  sc_cx->add_option("--d", cx_d)->required();
  sc_cx->add_option("--method", cx_method)
      ->check(CLI::IsMember(kMethodOrder));
  auto* cx_samples_opt = sc_cx->add_option("--samples", cx_samples);
  auto* cx_seed_opt = sc_cx->add_option("--seed", cx_seed);

  // table
  auto* sc_table = app.add_subcommand("table", "sweep over parameter lists");
  std::string tb_config, tb_gamma, tb_d, tb_eps, tb_method;
  std::uint64_t tb_samples = 0, tb_seed = 0;
  sc_table->add_option("--config", tb_config, "key=value sweep file")
      ->check(CLI::ExistingFile);
  sc_table->add_option("--gamma", tb_gamma, "comma list");
  sc_table->add_option("--d", tb_d, "comma list");
  sc_table->add_option("--eps", tb_eps,
                       "comma list of values or rule tags exp(-d), 1/d, "
                       "exp(-sqrt(d))");
  sc_table->add_option("--method", tb_method, "comma list");
  auto* tb_samples_opt = sc_table->add_option("--samples", tb_samples);
  auto* tb_seed_opt = sc_table->add_option("--seed", tb_seed);

  // pmf
  auto* sc_pmf = app.add_subcommand(
      "pmf", "exact tilted-sum pmf and its Poisson limit");
  double pm_gamma = 0.0, pm_eps = 0.0;
  std::int64_t pm_d = 0, pm_mmax = 20;
  sc_pmf->add_option("--gamma", pm_gamma)->required();
  sc_pmf->add_option("--eps", pm_eps)->required();
  sc_pmf->add_option("--d", pm_d)->required();
  sc_pmf->add_option("--m-max", pm_mmax);

  // clt
  auto* sc_clt = app.add_subcommand(
      "clt", "KS distance of the standardized tilted sum to normal");
  double cl_gamma = 0.0, cl_eps = 0.0;
  std::int64_t cl_d = 0;
  std::uint64_t cl_samples = 100000, cl_seed = 1;
  sc_clt->add_option("--gamma", cl_gamma)->required();
  sc_clt->add_option("--eps", cl_eps)->required();
  sc_clt->add_option("--d", cl_d)->required();
  sc_clt->add_option("--samples", cl_samples);
  sc_clt->add_option("--seed", cl_seed);

  // verify
  auto* sc_verify = app.add_subcommand("verify", "run a verification suite");
  std::string vf_suite;
  int vf_quad_order = 64;
  sc_verify->add_option("--suite", vf_suite)->required();
  sc_verify->add_option("--quad-order", vf_quad_order,
                        "Gauss-Hermite order for the eigen suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sc_params) {
      const ShapeParams p = gkc::make_shape_params(pa_gamma);
      std::printf("{\"gamma\":%s,\"omega\":%s,\"abs_ln_omega\":%s,\"c_omega\":%s}\n",
                  fmt_double17(p.gamma).c_str(), fmt_double17(p.omega).c_str(),
                  fmt_double17(p.abs_ln_omega).c_str(),
                  fmt_double17(p.c_omega).c_str());
      return 0;
    }
    if (*sc_cx) {
      if (cx_method == "mc" && (cx_samples_opt->count() == 0 ||
                                cx_seed_opt->count() == 0))
        throw UsageError("method mc requires --samples and --seed");
      const ShapeParams p = gkc::make_shape_params(cx_gamma);
      const Threshold th = gkc::make_threshold(cx_eps);
      if (cx_d < 1) throw UsageError("d must be >= 1");
      std::vector<Row> rows{compute_cell(p, th, cx_gamma, cx_d, cx_method,
                                         cx_samples, cx_seed)};
      emit(rows, kTableHeader, format);
      return 0;
    }
    if (*sc_table) {
      SweepConfig cfg;
      if (!tb_config.empty()) load_config_file(cfg, tb_config);
      if (!tb_gamma.empty()) apply_key(cfg, "gamma", tb_gamma, "--gamma");
      if (!tb_d.empty()) apply_key(cfg, "d", tb_d, "--d");
      if (!tb_eps.empty()) apply_key(cfg, "eps", tb_eps, "--eps");
      if (!tb_method.empty()) apply_key(cfg, "method", tb_method, "--method");
      if (tb_samples_opt->count() > 0) {
        cfg.samples = tb_samples;
        cfg.samples_set = true;
      }
      if (tb_seed_opt->count() > 0) {
        cfg.seed = tb_seed;
        cfg.seed_set = true;
      }
      if (cfg.gammas.empty() || cfg.ds.empty() || cfg.eps_entries.empty() ||
          cfg.methods.empty())
        throw UsageError(
            "table needs non-empty gamma, d, eps, and method lists");
      emit(run_sweep(cfg), kTableHeader, format);
      return 0;
    }
    if (*sc_pmf) {
      if (pm_d < 1) throw UsageError("d must be >= 1");
      if (pm_mmax < 0) throw UsageError("m-max must be >= 0");
      const ShapeParams p = gkc::make_shape_params(pm_gamma);
      const Threshold th = gkc::make_threshold(pm_eps);
      std::vector<Row> rows;
      for (std::int64_t m = 0; m <= pm_mmax; ++m) {
        for (const char* method : {"exact", "poisson"}) {
          Row row;
          row.gamma = pm_gamma;
          row.d = pm_d;
          row.eps = th.eps;
          row.m = m;
          row.method = method;
          row.value_kind = "pmf";
          const double v = method[0] == 'e'
                               ? gkc::tilted_sum_pmf(p, th, pm_d, m)
                               : gkc::poisson_limit_pmf(p, th, m);
          row.value = render_value(v);
          rows.push_back(row);
        }
      }
      emit(rows, {"gamma", "d", "eps", "m", "method", "value_kind", "value"},
           format);
      return 0;
    }
    if (*sc_clt) {
      if (cl_d < 1) throw UsageError("d must be >= 1");
      const ShapeParams p = gkc::make_shape_params(cl_gamma);
      const Threshold th = gkc::make_threshold(cl_eps);
      Row row;
      row.gamma = cl_gamma;
      row.d = cl_d;
      row.eps = th.eps;
      row.samples = cl_samples;
      row.seed = cl_seed;
      row.method = "mc";
      row.value_kind = "ks";
      row.value =
          render_value(gkc::clt_ks_distance(p, th, cl_d, cl_samples, cl_seed));
      emit({row},
           {"gamma", "d", "eps", "samples", "seed", "value_kind", "value"},
           format);
      return 0;
    }
    if (*sc_verify) return cmd_verify(vf_suite, vf_quad_order);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::length_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
