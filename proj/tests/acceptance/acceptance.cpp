// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when a
// criterion fails that is not listed as a known desk-scale gap.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kaclab/bounds.hpp"
#include "kaclab/clt_engine.hpp"
#include "kaclab/error.hpp"
#include "kaclab/experiments.hpp"
#include "kaclab/functionals.hpp"
#include "kaclab/kac_walk.hpp"
#include "kaclab/normalization.hpp"
#include "kaclab/parallel.hpp"
#include "kaclab/sphere_marginals.hpp"

using namespace kaclab;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

// Criteria that fail for documented reasons at desk scale.
const std::set<int> kKnownGaps{9};

constexpr double kBeta = 0.1;
const std::vector<int> kSweepN{32, 64, 128, 256, 512, 1024};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

double log_chi2(double k, double x) {
  return (0.5 * k - 1.0) * std::log(x) - 0.5 * x - 0.5 * k * std::log(2.0) - std::lgamma(0.5 * k);
}

struct SweepPoint {
  int N = 0;
  double delta = 0.0;
  double entropy = 0.0;
  double numerator = 0.0;
  double ratio = 0.0;
  double lower = 0.0;
  double paper_bound = NAN;
  double eps0 = 0.0;
  double certificate = 0.0;
};

std::vector<SweepPoint> run_sweep() {
  std::vector<SweepPoint> pts(kSweepN.size());
  parallel_for(static_cast<int>(kSweepN.size()), 0, [&](int i) {
    SweepPoint& p = pts[i];
    p.N = kSweepN[i];
    const Delta d = delta_schedule(p.N, kBeta).delta;
    const Density D = Density::kac_mixture(d);
    p.delta = d.value();
    const auto r = gamma_ratio(D, p.N);
    p.entropy = r.entropy;
    p.numerator = r.numerator;
    p.ratio = r.ratio;
    p.lower = r.ratio_lower_bound;
    p.eps0 = measured_eps(D, p.N, 0).eps;
    const double eps2 = measured_eps(D, p.N, 2).eps;
    try {
      p.paper_bound = paper_numerator_bound(p.N, d, eps2, lambda0(D, p.N));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCertificateUnavailable) throw;
    }
    const double s2 = D.sigma2();
    const auto o = bound_outside(p.N, d, kDefaultC, s2, alpha_outside(d), tail_integral(d, p.N));
    const auto in = bound_inside(p.N, d, kDefaultC, kBeta, s2, alpha_annulus(d, kBeta),
                                 m_constants(d).M_delta2, 0.0, 0.0);
    p.certificate = std::sqrt(p.N * s2) * bound_total(o, in).value;
  });
  return pts;
}

const std::vector<SweepPoint>& sweep() {
  static const std::vector<SweepPoint> pts = run_sweep();
  return pts;
}

Outcome gaussian_z() {
  const Density g = Density::standard_gaussian();
  double worst = 0.0;
  for (int N : {8, 16, 64, 128}) {
    for (double u : {0.5 * N, 1.0 * N, 2.0 * N}) {
      const double lz = log_Z(g, N, u).logZ.log_magnitude();
      worst = std::max(worst, std::abs(lz + 0.5 * N * std::log(2.0 * kPi) + 0.5 * u));
    }
  }
  return {worst <= 1e-8, "max error " + fmt(worst)};
}

Outcome chi_square() {
  const Density g = Density::standard_gaussian();
  const Density half = Density::kac_mixture(Delta::make(0.5));
  double worst = 0.0;
  for (int n : {5, 8, 16, 64, 128}) {
    const double w = 6.0 * std::sqrt(2.0 * n);
    const double lo = std::max(n - w, 0.05 * n), hi = n + w;
    for (int i = 0; i <= 40; ++i) {
      const double u = lo + (hi - lo) * i / 40.0;
      const double exact = std::exp(log_chi2(n, u));
      for (const Density* D : {&g, &half}) {
        worst = std::max(worst, std::abs(conv_power(*D, n, u) - exact) / exact);
      }
    }
  }
  return {worst <= 1e-8, "max relative error " + fmt(worst)};
}

Outcome marginal_mass() {
  double w1 = 0.0, w2 = 0.0;
  for (int N : {32, 64, 128, 256}) {
    const Density D = Density::kac_mixture(delta_schedule(N, kBeta).delta);
    w1 = std::max(w1, std::abs(p1_mass(MarginalKernel(D, N, 1)) - 1.0));
    w2 = std::max(w2, std::abs(p2_mass(MarginalKernel(D, N, 2)) - 1.0));
  }
  return {w1 <= 1e-6 && w2 <= 1e-5, "P1 error " + fmt(w1) + ", P2 error " + fmt(w2)};
}

Outcome null_tests() {
  double worst = 0.0;
  for (const Density& D : {Density::standard_gaussian(), Density::kac_mixture(Delta::make(0.5))}) {
    for (int N : {8, 32}) {
      worst = std::max(worst, std::abs(entropy(D, N).H));
      worst = std::max(worst, std::abs(production_numerator(D, N).value));
    }
  }
  return {worst <= 1e-6, "max |value| " + fmt(worst)};
}

Outcome entropy_trend() {
  bool decreasing = true;
  double prev = INFINITY, last = 0.0;
  std::string gaps;
  for (const auto& p : sweep()) {
    const double gap = std::abs(p.entropy / p.N - kHalfLog2);
    decreasing = decreasing && gap < prev;
    prev = last = gap;
    gaps += (gaps.empty() ? "" : " ") + fmt(gap);
  }
  return {decreasing && last <= 0.1, "gaps " + gaps};
}

Outcome positivity() {
  bool ok = true;
  double min_margin = INFINITY;
  for (const auto& p : sweep()) {
    ok = ok && p.numerator >= -1e-10 && p.ratio >= p.lower - 1e-9;
    min_margin = std::min(min_margin, p.ratio / p.lower);
  }
  return {ok, "min ratio / (2/(N-1)) " + fmt(min_margin)};
}

Outcome paper_bound() {
  bool ok = true;
  int defined = 0;
  double worst = 0.0;
  for (const auto& p : sweep()) {
    if (std::isnan(p.paper_bound)) continue;
    ++defined;
    const double x = p.numerator / p.N / p.paper_bound;
    worst = std::max(worst, x);
    ok = ok && x <= 1.0;
  }
  return {ok, std::to_string(defined) + " points, max numerator/N over bound " + fmt(worst)};
}

Outcome scaling() {
  std::vector<ScalingPoint> pts;
  bool decreasing = true;
  for (const auto& p : sweep()) {
    if (!pts.empty()) decreasing = decreasing && p.ratio < pts.back().ratio;
    pts.push_back({p.N, p.ratio});
  }
  const auto fit = villani_scaling_check(pts, kBeta);
  const bool ok = fit.slope >= -0.95 && fit.slope <= -0.60 && fit.spread < 20.0 && decreasing;
  return {ok, "slope " + fmt(fit.slope) + ", spread " + fmt(fit.spread) +
                  (decreasing ? ", decreasing" : ", not decreasing")};
}

Outcome local_clt() {
  bool decreasing = true, dominated = true;
  double prev = INFINITY;
  std::string eps;
  for (const auto& p : sweep()) {
    decreasing = decreasing && p.eps0 < prev;
    dominated = dominated && p.eps0 <= p.certificate;
    prev = p.eps0;
    eps += (eps.empty() ? "" : " ") + fmt(p.eps0);
  }
  return {decreasing && dominated, "eps0 " + eps + (decreasing ? "; decreasing" : "; not decreasing") +
                                       (dominated ? "; certificate dominates" : "; certificate exceeded")};
}

Outcome mc_agreement() {
  bool ok = true;
  std::string z;
  for (auto [N, dv] : {std::pair{8, 0.1}, {16, 0.1}, {32, 0.0625}}) {
    const Density D = Density::kac_mixture(Delta::make(dv));
    const double quad = production_numerator(D, N).value;
    const auto mc = mc_numerator(D, N, 100000, 1);
    const double score = std::abs(mc.estimate - quad) / mc.standard_error;
    ok = ok && score <= 3.0;
    z += (z.empty() ? "" : " ") + fmt(score);
  }
  return {ok, "|mc - quad| / se: " + z};
}

Outcome kac_walk() {
  WalkConfig c;
  c.N = 64;
  c.steps = 1000000;
  c.stride = 1000;
  c.observables = {"m4"};
  const auto t = run(c);
  const bool energy = t.max_energy_drift <= 1e-9;
  const auto s = summarize_column(t, 0);
  const double expect = 3.0 * 64 / 66.0;
  const bool stationary = std::abs(s.mean - expect) <= 3.0 * s.standard_error;
  RunConfig w;
  w.set("N", "16");
  w.set("steps", "5000");
  w.set("seed", "42");
  const bool identical = run_command("walk", w).csv == run_command("walk", w).csv;
  return {energy && stationary && identical,
          "drift " + fmt(t.max_energy_drift) + ", m4 " + fmt(s.mean) + " +- " +
              fmt(s.standard_error) + " vs " + fmt(expect) +
              (identical ? ", traces identical" : ", traces differ")};
}

Outcome inequality_grid() {
  bool ok = true;
  std::string codes;
  for (const char* d : {"0.1", "0.05", "0.01"}) {
    RunConfig c;
    c.set("delta", d);
    const int code = run_command("bounds", c).exit_code;
    ok = ok && code == 0;
    codes += std::string(codes.empty() ? "" : " ") + "delta=" + d + (code == 0 ? ":hold" : ":fail");
  }
  return {ok, codes};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Gaussian normalization oracle", gaussian_z},
      {"chi-square convolution oracle", chi_square},
      {"marginal normalization", marginal_mass},
      {"equilibrium null tests", null_tests},
      {"entropy limit trend", entropy_trend},
      {"positivity and spectral-gap lower bound", positivity},
      {"numerator bound domination", paper_bound},
      {"scaling law", scaling},
      {"local CLT trend and certificate", local_clt},
      {"Monte Carlo numerator agreement", mc_agreement},
      {"Kac walk invariants", kac_walk},
      {"appendix inequalities and properties of h", inequality_grid},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o = {false, std::string("error (") + error_code_name(e.code()) + "): " + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = !o.ok && kKnownGaps.count(id) > 0;
    if (!o.ok && !known) ++unexpected;
    std::printf("%s %2d %s: %s [%.1f s]%s\n", o.ok ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                o.detail.c_str(), sec, known ? " (known desk-scale gap)" : "");
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
