#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "kaclab/bounds.hpp"
#include "kaclab/clt_engine.hpp"
#include "kaclab/densities.hpp"
#include "kaclab/error.hpp"
#include "kaclab/experiments.hpp"
#include "kaclab/functionals.hpp"
#include "kaclab/kac_walk.hpp"
#include "kaclab/normalization.hpp"
#include "kaclab/parallel.hpp"

namespace kaclab {

namespace {

constexpr const char* kSweepDefaultN = "32,64,128,256,512,1024";

// Rows of an assertion table; `ok` tracks whether every asserted row held.
struct CheckTable {
  std::string rows;
  bool ok = true;

  void add(const std::string& section, const std::string& check, double lhs,
           double rhs, bool holds) {
    ok = ok && holds;
    rows += section + "," + check + "," + format_double(lhs) + "," +
            format_double(rhs) + "," + (holds ? "HOLD" : "FAIL") + "\n";
  }
  void info(const std::string& section, const std::string& check, double lhs,
            double rhs) {
    rows += section + "," + check + "," + format_double(lhs) + "," +
            format_double(rhs) + ",INFO\n";
  }
};

Delta config_delta(const RunConfig& cfg) {
  const double value = cfg.get_double("delta");
  try {
    return Delta::make(value);
  } catch (const Error& e) {
    fail(ErrorCode::kConfig, std::string("config: ") + e.what());
  }
}

int single_N(const RunConfig& cfg) {
  const auto list = cfg.get_int_list("N");
  require(list.size() == 1, ErrorCode::kConfig,
          "config: this command takes a single N");
  return list.front();
}

// The density of a command: the Gaussian oracle, an explicit delta, or the
// scheduled delta_N. Also returns the delta actually used.
struct ResolvedDensity {
  Density density;
  double delta;
  bool scheduled;
};

ResolvedDensity resolve_density(const RunConfig& cfg, int N) {
  if (cfg.get_bool("oracle_gaussian")) {
    return {Density::standard_gaussian(), 0.5, false};
  }
  if (!cfg.get("delta").empty()) {
    const Delta d = config_delta(cfg);
    return {Density::kac_mixture(d), d.value(), false};
  }
  const auto sd = delta_schedule(N, cfg.get_double("beta"));
  return {Density::kac_mixture(sd.delta), sd.delta.value(), true};
}

NumeratorGrid config_grid(const RunConfig& cfg) {
  NumeratorGrid g;
  g.theta = cfg.get_int("grid_theta");
  g.phi = cfg.get_int("grid_phi");
  g.radial = cfg.get_int("grid_r");
  return g;
}

std::string summary_line(const std::string& key, double value) {
  return key + " = " + format_double(value) + "\n";
}

// ---- density-check --------------------------------------------------------

CommandResult density_check(RunConfig cfg) {
  cfg.set_default("delta", "0.1");
  const Delta d = config_delta(cfg);
  const Density D = Density::kac_mixture(d);
  CommandResult out;
  out.csv = cfg.header("density-check");
  if (d.is_collapsed()) {
    out.csv += "# notice: delta = 1/2, the mixture collapses to the standard Gaussian\n";
    out.summary += "notice: delta = 1/2, the mixture collapses to the standard Gaussian\n";
  }
  out.csv += "check,value,reference,abs_error,tolerance,status\n";
  bool ok = true;
  auto check = [&](const std::string& name, double value, double reference,
                   double tol) {
    const double err = std::abs(value - reference);
    const bool holds = err <= tol * std::max(1.0, std::abs(reference));
    ok = ok && holds;
    out.csv += name + "," + format_double(value) + "," + format_double(reference) +
               "," + format_double(err) + "," + format_double(tol) + "," +
               (holds ? "HOLD" : "FAIL") + "\n";
  };

  const auto m = density_moments_quadrature(D);
  check("f_mass", m.mass, 1.0, 1e-10);
  check("f_second_moment", m.second, 1.0, 1e-10);
  check("f_fourth_moment", m.fourth, fourth_moment(d), 1e-10);
  check("h_mass", square_law_moment_quadrature(D, 0), 1.0, 1e-9);
  check("h_mean", square_law_moment_quadrature(D, 1), 1.0, 1e-9);
  check("h_second_moment", square_law_moment_quadrature(D, 2), fourth_moment(d), 1e-9);
  check("sigma2_closed_form", D.sigma2(), sigma2(d), 1e-12);
  for (double xi : {0.05, 0.5, 2.0}) {
    const auto exact = D.char_fn(xi);
    const auto quad = char_fn_quadrature(D, xi);
    check("char_fn_re(" + format_double(xi) + ")", quad.real(), exact.real(), 1e-8);
    check("char_fn_im(" + format_double(xi) + ")", quad.imag(), exact.imag(), 1e-8);
    check("hermitian(" + format_double(xi) + ")",
          std::abs(D.char_fn(-xi) - std::conj(exact)), 0.0, 1e-15);
    const double mod = std::abs(exact);
    const bool below = mod < 1.0;
    ok = ok && below;
    out.csv += "char_fn_modulus(" + format_double(xi) + ")," + format_double(mod) +
               ",1," + format_double(1.0 - mod) + ",0," + (below ? "HOLD" : "FAIL") + "\n";
  }
  for (double v : {0.3, 1.0, 3.0}) {
    check("f_symmetry(" + format_double(v) + ")", D.pdf(-v), D.pdf(v), 1e-15);
  }
  out.exit_code = ok ? 0 : 1;
  out.summary += std::string("density-check: ") + (ok ? "all checks hold" : "FAILED") +
                 " for " + D.describe() + "\n";
  return out;
}

// ---- clt --------------------------------------------------------------------

CommandResult clt(RunConfig cfg) {
  cfg.set_default("N", "64");
  const int N = single_N(cfg);
  if (!cfg.get_bool("oracle_gaussian")) {
    require(N >= 5, ErrorCode::kUnsupportedOrder,
            "clt: convolution order " + std::to_string(N) +
                " is below the minimum 5 for the mixture");
  }
  const auto rd = resolve_density(cfg, N);
  const Density& D = rd.density;
  require(N >= minimum_order(D), ErrorCode::kUnsupportedOrder,
          "clt: convolution order below the supported minimum");

  const auto sup = measured_eps(D, N, 0);
  const double s2 = D.sigma2();
  const double scale = std::sqrt(N * s2);
  std::vector<double> u(257);
  for (int i = 0; i < 257; ++i) {
    u[i] = sup.u_low + (sup.u_high - sup.u_low) * i / 256.0;
  }
  const auto exact = conv_power_grid(D, N, u);

  CommandResult out;
  out.csv = cfg.header("clt");
  out.csv += "u,exact,gaussian,deviation\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double g = gaussian_llt(N, s2, u[i]);
    out.csv += format_double(u[i]) + "," + format_double(exact.values[i]) + "," +
               format_double(g) + "," + format_double(scale * (exact.values[i] - g)) + "\n";
  }
  std::string s;
  s += summary_line("delta", rd.delta);
  s += summary_line("sigma2", s2);
  s += summary_line("eps0", sup.eps);
  s += summary_line("eps0_argmax", sup.argmax);
  bool ok = true;
  if (D.kind() == Density::Kind::kKacMixture && !Delta::make(rd.delta).is_collapsed()) {
    const Delta d = Delta::make(rd.delta);
    const double beta = cfg.get_double("beta");
    const auto mc = m_constants(d);
    const auto o = bound_outside(N, d, kDefaultC, s2, alpha_outside(d),
                                 tail_integral(d, N));
    const auto in = bound_inside(N, d, kDefaultC, beta, s2, alpha_annulus(d, beta),
                                 mc.M_delta2, 0.0, 0.0);
    const auto total = bound_total(o, in);
    const double cert = scale * total.value;
    ok = sup.eps <= cert;
    s += summary_line("certificate_outside", o.value);
    s += summary_line("certificate_inside", in.value);
    s += summary_line("certificate_total", cert);
    s += std::string("certificate >= eps0: ") + (ok ? "HOLD" : "FAIL") + "\n";
  } else {
    s += "certificate: not applicable to the Gaussian reference\n";
  }
  for (std::size_t pos = 0; pos < s.size();) {
    const auto nl = s.find('\n', pos);
    out.csv += "# " + s.substr(pos, nl - pos) + "\n";
    pos = nl + 1;
  }
  out.summary = s;
  out.exit_code = ok ? 0 : 1;
  return out;
}

// ---- zn ---------------------------------------------------------------------

CommandResult zn(RunConfig cfg) {
  cfg.set_default("N", "32");
  const int N = single_N(cfg);
  const auto rd = resolve_density(cfg, N);
  const Density& D = rd.density;
  require(N >= minimum_order(D), ErrorCode::kUnsupportedOrder,
          "zn: N below the supported convolution order");
  const double spread = 6.0 * std::sqrt(N * D.sigma2());
  const double lo = std::max(N - spread, 0.01 * N), hi = N + spread;

  CommandResult out;
  out.csv = cfg.header("zn");
  out.csv += "u,log_z_inversion,log_z_gaussian,difference,s_density\n";
  bool ok = true;
  double worst_oracle = 0.0, worst_gap = 0.0;
  const bool gaussian = D.kind() == Density::Kind::kStandardGaussian;
  for (int i = 0; i <= 64; ++i) {
    const double u = lo + (hi - lo) * i / 64.0;
    const double inv = log_Z(D, N, u).logZ.log_magnitude();
    const double approx = log_Z_gaussian(D, N, 0, u).logZ.log_magnitude();
    const auto h = conv_power_eval(D, N, u);
    worst_gap = std::max(worst_gap, std::abs(inv - approx));
    if (gaussian) {
      const double oracle = -0.5 * N * std::log(2.0 * kPi) - 0.5 * u;
      worst_oracle = std::max(worst_oracle, std::abs(inv - oracle));
    }
    out.csv += format_double(u) + "," + format_double(inv) + "," + format_double(approx) +
               "," + format_double(inv - approx) + "," + format_double(h.value) + "\n";
  }
  out.summary += summary_line("max_abs_difference", worst_gap);
  if (gaussian) {
    ok = worst_oracle <= 1e-8;
    out.summary += summary_line("max_abs_oracle_error", worst_oracle);
    out.summary += std::string("gaussian oracle: ") + (ok ? "HOLD" : "FAIL") + "\n";
  }
  out.exit_code = ok ? 0 : 1;
  return out;
}

// ---- gamma / sweep ------------------------------------------------------------

struct RecordOutcome {
  SweepRecord record;
  bool ok = true;
  std::string notes;
};

RecordOutcome compute_record(const RunConfig& cfg, int N) {
  const auto t0 = std::chrono::steady_clock::now();
  const double beta = cfg.get_double("beta");
  const auto sd = delta_schedule(N, beta);  // validates beta even with an explicit delta
  Delta d = sd.delta;
  if (!cfg.get("delta").empty()) d = config_delta(cfg);
  const Density D = Density::kac_mixture(d);
  const auto grid = config_grid(cfg);

  RecordOutcome o;
  SweepRecord& r = o.record;
  r.N = N;
  r.beta = beta;
  r.delta = d.value();
  const auto report = gamma_ratio(D, N, {}, grid);
  r.H_per_particle = report.entropy / N;
  r.numerator_per_particle = report.numerator_per_particle;
  r.ratio = report.ratio;
  r.ratio_lower_bound = report.ratio_lower_bound;
  r.eps0 = measured_eps(D, N, 0).eps;
  r.eps1 = measured_eps(D, N, 1).eps;
  r.eps2 = measured_eps(D, N, 2).eps;
  try {
    r.paper_bound_per_particle = paper_numerator_bound(N, d, r.eps2, lambda0(D, N));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCertificateUnavailable) throw;
    r.paper_bound_per_particle = std::numeric_limits<double>::quiet_NaN();
    o.notes += "N=" + std::to_string(N) + ": certificate unavailable\n";
  }
  if (cfg.get_bool("timing")) {
    r.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  const bool positive = report.numerator >= -1e-10;
  const bool villani = r.ratio >= r.ratio_lower_bound - 1e-9;
  const bool dominated = std::isnan(r.paper_bound_per_particle) ||
                         r.numerator_per_particle <= r.paper_bound_per_particle;
  o.ok = positive && villani && dominated;
  if (!dominated) {
    o.notes += "N=" + std::to_string(N) + ": numerator/N exceeds the numerator bound\n";
  }
  return o;
}

CommandResult gamma(RunConfig cfg) {
  cfg.set_default("N", "32");
  const int N = single_N(cfg);
  auto o = compute_record(cfg, N);
  CommandResult out;
  out.csv = cfg.header("gamma") + sweep_csv_header() + sweep_csv_row(o.record);
  out.summary = o.notes;
  out.summary += summary_line("ratio", o.record.ratio);
  out.summary += summary_line("ratio_lower_bound", o.record.ratio_lower_bound);
  const long samples = cfg.get_long("samples");
  if (samples > 0) {
    const Density D = Density::kac_mixture(Delta::make(o.record.delta));
    const auto mc = mc_numerator(D, N, samples, cfg.get_u64("seed"), cfg.get_int("threads"));
    const double quad = o.record.numerator_per_particle * N;
    const bool agree = std::abs(mc.estimate - quad) <= 3.0 * mc.standard_error;
    out.summary += summary_line("mc_numerator", mc.estimate);
    out.summary += summary_line("mc_standard_error", mc.standard_error);
    out.summary += std::string("mc agreement within 3 SE: ") + (agree ? "HOLD" : "FAIL") + "\n";
    o.ok = o.ok && agree;
  }
  out.exit_code = o.ok ? 0 : 1;
  return out;
}

CommandResult sweep(RunConfig cfg) {
  cfg.set_default("N", kSweepDefaultN);
  auto Ns = cfg.get_int_list("N");
  std::sort(Ns.begin(), Ns.end());
  Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
  require(Ns.size() >= 5, ErrorCode::kInsufficientData,
          "sweep: at least 5 distinct N values are needed for the scaling fit");
  // Echo the canonical list so the output does not depend on the input order.
  std::string canonical;
  for (int n : Ns) canonical += (canonical.empty() ? "" : ",") + std::to_string(n);
  if (cfg.is_set("N")) {
    cfg.set("N", canonical);
  } else {
    cfg.set_default("N", canonical);
  }
  const double beta = cfg.get_double("beta");
  const bool synthetic = cfg.get_bool("synthetic");

  std::vector<RecordOutcome> outcomes(Ns.size());
  if (synthetic) {
    for (std::size_t i = 0; i < Ns.size(); ++i) {
      const int N = Ns[i];
      SweepRecord& r = outcomes[i].record;
      r.N = N;
      r.beta = beta;
      r.delta = delta_schedule(N, beta).delta.value();
      r.ratio = std::log(static_cast<double>(N)) / std::pow(N, 1.0 - 2.0 * beta);
      r.ratio_lower_bound = 2.0 / (N - 1.0);
    }
  } else {
    parallel_for(static_cast<int>(Ns.size()), cfg.get_int("threads"),
                 [&](int i) { outcomes[i] = compute_record(cfg, Ns[i]); });
  }

  CommandResult out;
  out.csv = cfg.header("sweep") + sweep_csv_header();
  std::vector<ScalingPoint> points;
  bool ok = true;
  for (const auto& o : outcomes) {
    out.csv += sweep_csv_row(o.record);
    out.summary += o.notes;
    ok = ok && o.ok;
    points.push_back({o.record.N, o.record.ratio});
  }
  const auto fit = villani_scaling_check(points, beta);
  bool decreasing = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    decreasing = decreasing && points[i].ratio < points[i - 1].ratio;
  }
  std::string s;
  s += summary_line("slope", fit.slope);
  s += summary_line("reference_slope", -(1.0 - 2.0 * beta));
  s += summary_line("normalized_spread", fit.spread);
  s += std::string("ratio decreasing in N: ") + (decreasing ? "yes" : "no") + "\n";
  for (std::size_t pos = 0; pos < s.size();) {
    const auto nl = s.find('\n', pos);
    out.csv += "# " + s.substr(pos, nl - pos) + "\n";
    pos = nl + 1;
  }
  out.summary += s;

  if (!cfg.get("svg").empty()) {
    try {
      LogLogSeries data, ref;
      for (const auto& p : points) {
        data.x.push_back(p.N);
        data.y.push_back(p.ratio);
      }
      // C log N / N^{1 - 2 beta}, with C matched at the largest N.
      const double nmax = points.back().N;
      const double C = points.back().ratio * std::pow(nmax, 1.0 - 2.0 * beta) / std::log(nmax);
      const double nmin = points.front().N;
      for (int k = 0; k <= 32; ++k) {
        const double n = nmin * std::pow(nmax / nmin, k / 32.0);
        ref.x.push_back(n);
        ref.y.push_back(C * std::log(n) / std::pow(n, 1.0 - 2.0 * beta));
      }
      out.svg = loglog_svg("entropy production ratio vs N (beta = " + format_double(beta) + ")",
                           data, ref);
    } catch (const std::exception& e) {
      out.summary += std::string("warning: plot not produced: ") + e.what() + "\n";
    }
  }
  out.exit_code = ok ? 0 : 1;
  return out;
}

// ---- walk -------------------------------------------------------------------

CommandResult walk(RunConfig cfg) {
  cfg.set_default("N", "32");
  WalkConfig w;
  w.N = single_N(cfg);
  const std::string init = cfg.get("init");
  if (init == "uniform") {
    w.init = InitialState::kUniform;
  } else if (init == "product-delta" || init == "product_delta") {
    w.init = InitialState::kProductDelta;
    cfg.set_default("delta", "0.1");
    w.delta = config_delta(cfg).value();
  } else {
    fail(ErrorCode::kConfig, "config: init must be 'uniform' or 'product-delta'");
  }
  w.steps = cfg.get_long("steps");
  w.seed = cfg.get_u64("seed");
  w.observables = cfg.get_list("observables");
  w.stride = cfg.get_long("stride");
  require(!w.observables.empty(), ErrorCode::kConfig, "config: no observables");
  const auto trace = run(w);

  CommandResult out;
  out.csv = cfg.header("walk") + "time,step";
  for (const auto& name : trace.names) out.csv += "," + name;
  out.csv += "\n";
  for (const auto& row : trace.rows) {
    out.csv += format_double(row.time) + "," + std::to_string(row.step);
    for (double v : row.values) out.csv += "," + format_double(v);
    out.csv += "\n";
  }
  const bool ok = trace.max_energy_drift <= 1e-9;
  out.summary += summary_line("rows", static_cast<double>(trace.rows.size()));
  out.summary += summary_line("max_relative_energy_drift", trace.max_energy_drift);
  out.summary += summary_line("rescales", trace.rescales);
  if (trace.rows.size() >= 64) {
    for (std::size_t c = 0; c < trace.names.size(); ++c) {
      const auto cs = summarize_column(trace, c);
      out.summary += trace.names[c] + " mean = " + format_double(cs.mean) +
                     " +- " + format_double(cs.standard_error) + "\n";
    }
  }
  out.summary += std::string("energy conservation: ") + (ok ? "HOLD" : "FAIL") + "\n";
  out.exit_code = ok ? 0 : 1;
  return out;
}

// ---- bounds -----------------------------------------------------------------

CommandResult bounds(RunConfig cfg) {
  cfg.set_default("N", "32");
  const int N = single_N(cfg);
  require(N >= 5, ErrorCode::kUnsupportedOrder, "bounds: need N >= 5");
  const double beta = cfg.get_double("beta");
  require(beta > 0.0 && beta < 1.0 / 6.0, ErrorCode::kDomain,
          "bounds: beta must lie in (0, 1/6)");
  Delta d = cfg.get("delta").empty() ? delta_schedule(N, beta).delta : config_delta(cfg);
  require(!d.is_collapsed(), ErrorCode::kDomain,
          "bounds: the frequency-split constants need delta < 1/2");
  const Density D = Density::kac_mixture(d);
  const double dv = d.value();

  CheckTable t;
  for (double a : {0.5, 1.0, 2.0}) {
    for (double eta : {0.5, 1.0, 2.0}) {
      const auto g = gaussian_integral_bounds(a, eta);
      const std::string at = "(a=" + format_double(a) + " eta=" + format_double(eta) + ")";
      t.add("gaussian_integral", "lower<=middle" + at, g.lower, g.middle,
            g.lower <= g.middle);
      t.add("gaussian_integral", "middle<=upper" + at, g.middle, g.upper,
            g.middle <= g.upper);
      t.add("gaussian_integral", "tail<=tail_bound" + at, g.tail_exact, g.tail_bound,
            g.tail_exact <= g.tail_bound);
      // The exponent as printed (a instead of a^2) is reported, not asserted.
      t.info("gaussian_integral", "printed_lower_vs_middle" + at, g.lower_printed, g.middle);
    }
  }
  for (double a : {0.5, 1.0, 2.0}) {
    for (auto [k0, m] : {std::pair<long, long>{0, 10}, {1, 100}, {10, 10000}}) {
      const auto s = special_sum_bounds(a, k0, m);
      const std::string at = "(a=" + format_double(a) + " k0=" + std::to_string(k0) +
                             " m=" + std::to_string(m) + ")";
      t.add("special_sums", "sum1<=bound1" + at, s.sum1, s.bound1, s.sum1 <= s.bound1);
      t.add("special_sums", "sum2<=bound2" + at, s.sum2, s.bound2, s.sum2 <= s.bound2);
    }
  }

  const double alpha = alpha_outside(d);
  const double alpha_b = alpha_annulus(d, beta);
  const auto mc = m_constants(d);
  const double tail = tail_integral(d, N);
  const double lead_i = dv * (1.0 - std::pow(0.8, 0.25));
  const double lead_iii = std::pow(dv, 1.0 + 2.0 * beta) / 16.0;
  t.add("h_properties", "(i)alpha>=0.9*leading", alpha, 0.9 * lead_i, alpha >= 0.9 * lead_i);
  t.add("h_properties", "(iii)alpha_beta>=0.5*leading", alpha_b, 0.5 * lead_iii,
        alpha_b >= 0.5 * lead_iii);
  const double tail_rhs = 2.0 * std::pow(1.0 - alpha, N) / kPi + 2.0 / (kPi * (N - 3.0));
  t.add("h_properties", "(v)tail<=2(1-alpha)^n/pi+2/(pi(n-3))", tail, tail_rhs,
        tail <= tail_rhs);
  t.info("h_properties", "(ii)M", mc.M, mc.limit_ratio);
  t.info("h_properties", "(ii)M*delta^2", mc.M_delta2, 0.0);

  const double s2 = D.sigma2();
  const auto o = bound_outside(N, d, kDefaultC, s2, alpha, tail);
  const auto in = bound_inside(N, d, kDefaultC, beta, s2, alpha_b, mc.M_delta2, 0.0, 0.0);
  const auto measured = measured_region_integrals(D, N);
  t.add("frequency_split", "outside_measured<=certificate", measured.outside, o.value,
        measured.outside <= o.value);
  t.add("frequency_split", "inside_measured<=certificate", measured.inside, in.value,
        measured.inside <= in.value);
  for (int k = 0; k < 4; ++k) {
    t.info("frequency_split", "inside_term" + std::to_string(k + 1), in.terms[k], 0.0);
  }
  for (int k = 0; k < 3; ++k) {
    t.info("frequency_split", "outside_term" + std::to_string(k + 1), o.terms[k], 0.0);
  }
  if (cfg.get_bool("inject_violation")) {
    t.add("fixture", "injected_violation", 1.0, 0.0, false);
  }

  CommandResult out;
  out.csv = cfg.header("bounds") + "section,check,lhs,rhs,status\n" + t.rows;
  out.exit_code = t.ok ? 0 : 1;
  out.summary = std::string("bounds: ") + (t.ok ? "all asserted rows HOLD" : "violation found") +
                " (N=" + std::to_string(N) + ", delta=" + format_double(dv) + ")\n";
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"density-check", "clt", "zn", "gamma",
                                              "sweep", "walk", "bounds"};
  return names;
}

CommandResult run_command(const std::string& command, const RunConfig& config) {
  if (command == "density-check") return density_check(config);
  if (command == "clt") return clt(config);
  if (command == "zn") return zn(config);
  if (command == "gamma") return gamma(config);
  if (command == "sweep") return sweep(config);
  if (command == "walk") return walk(config);
  if (command == "bounds") return bounds(config);
  fail(ErrorCode::kConfig, "unknown command '" + command + "'");
}

}  // namespace kaclab
