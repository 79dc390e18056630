#include "kaclab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kaclab/error.hpp"
#include "kaclab/normalization.hpp"
#include "kaclab/quadrature.hpp"

namespace kaclab {

namespace {

std::vector<double> breakpoints(const Density& density, double vmax) {
  std::vector<double> b{0.0};
  for (const auto& c : density.components()) {
    const double s = std::sqrt(c.variance);
    for (double k : {0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0}) {
      if (k * s < vmax) b.push_back(k * s);
    }
  }
  b.push_back(vmax);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace

EntropyReport entropy(const Density& density, int N, const FourierPlan& plan) {
  require(N >= 6, ErrorCode::kDomain, "entropy: need N >= 6");
  const MarginalKernel k1(density, N, 1, plan);
  const double vmax = marginal_cutoff(density, N);
  auto f = [&](double v) { return marginal_p1(k1, v) * density.log_pdf(v); };
  const double mean_log_f =
      2.0 * integrate_piecewise(f, breakpoints(density, vmax), 1e-10, 10).value;
  EntropyReport r;
  r.N = N;
  r.delta = density.delta();
  r.H = N * mean_log_f - k1.log_z_N();
  r.per_particle = r.H / N;
  r.limit_gap = std::abs(r.per_particle - kHalfLog2);
  return r;
}

namespace {

double numerator_at(const Density& density, int N, const MarginalKernel& k2,
                    int angular, int radial) {
  const double rmax = marginal_cutoff(density, N);
  const auto rule = gauss_legendre_panels(0.0, rmax, radial / 16, 16);
  std::vector<double> cos_t(angular), sin_t(angular);
  for (int k = 0; k < angular; ++k) {
    cos_t[k] = std::cos(2.0 * kPi * k / angular);
    sin_t[k] = std::sin(2.0 * kPi * k / angular);
  }
  const double cell = 2.0 * kPi / angular;
  std::vector<double> terms(rule.nodes.size());
  std::vector<double> G(angular), g(angular), prod(angular);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    for (int k = 0; k < angular; ++k) {
      G[k] = density.log_pdf(r * cos_t[k]) + density.log_pdf(r * sin_t[k]);
      g[k] = std::exp(G[k]);
    }
    // sum_{k,m} (G_k - G_m)(g_k - g_m) = 2M sum_k (G_k - mean G)(g_k - mean g).
    const double mG = pairwise_sum(G) / angular;
    const double mg = pairwise_sum(g) / angular;
    for (int k = 0; k < angular; ++k) prod[k] = (G[k] - mG) * (g[k] - mg);
    const double pairs = 2.0 * angular * pairwise_sum(prod) * cell * cell;
    terms[i] = rule.weights[i] * r * k2.weight(r * r) * pairs;
  }
  return N / (4.0 * kPi) * pairwise_sum(terms);
}

}  // namespace

NumeratorResult production_numerator(const Density& density, int N,
                                     const FourierPlan& plan,
                                     const NumeratorGrid& grid) {
  require(N >= 7, ErrorCode::kDomain, "production_numerator: need N >= 7");
  require(grid.theta == grid.phi, ErrorCode::kConfig,
          "production_numerator: theta and phi grids must match");
  require(grid.theta >= 8 && grid.radial >= 16 && grid.radial % 16 == 0,
          ErrorCode::kConfig,
          "production_numerator: need theta >= 8 and radial a multiple of 16");
  const MarginalKernel k2(density, N, 2, plan);
  NumeratorGrid g = grid;
  double prev = numerator_at(density, N, k2, g.theta, g.radial);
  for (int doubling = 1; doubling <= 2; ++doubling) {
    g.theta *= 2;
    g.phi *= 2;
    g.radial *= 2;
    const double cur = numerator_at(density, N, k2, g.theta, g.radial);
    const double change = std::abs(cur - prev);
    if (change <= 1e-4 * std::abs(cur) + 1e-12) {
      NumeratorResult r;
      r.value = cur;
      r.per_particle = cur / N;
      r.grid_used = g;
      r.last_change = std::abs(cur) > 0.0 ? change / std::abs(cur) : 0.0;
      require(r.value >= -1e-10, ErrorCode::kInconsistent,
              "production_numerator: negative value");
      return r;
    }
    prev = cur;
  }
  fail(ErrorCode::kRefinement,
       "production_numerator: refinement did not settle below 1e-4 relative");
}

ImportanceEstimate mc_numerator(const Density& density, int N, long samples,
                                std::uint64_t seed, int threads) {
  constexpr int kTheta = 128;
  std::vector<double> cos_t(kTheta);
  for (int q = 0; q < kTheta; ++q) cos_t[q] = std::cos(2.0 * kPi * q / kTheta);
  auto observable = [&](std::span<const double> v) {
    const int pairs = static_cast<int>(v.size()) / 2;
    double acc = 0.0;
    for (int p = 0; p < pairs; ++p) {
      const double a = v[2 * p], b = v[2 * p + 1];
      const double r = std::hypot(a, b);
      double avg = 0.0;
      for (double c : cos_t) avg += density.log_pdf(r * c);
      avg /= kTheta;
      acc += density.log_pdf(a) + density.log_pdf(b) - 2.0 * avg;
    }
    return acc / pairs;
  };
  auto est = importance_expectation(observable, N, density, samples, seed, threads);
  est.estimate *= N;
  est.standard_error *= N;
  return est;
}

double paper_numerator_bound(int N, Delta d, double eps2, double lambda0_value) {
  require(N >= 3, ErrorCode::kDomain, "paper_numerator_bound: need N >= 3");
  const double denom = 1.0 + std::sqrt(2.0 * kPi) * lambda0_value;
  if (!(denom > 0.0)) {
    fail(ErrorCode::kCertificateUnavailable,
         "paper_numerator_bound: 1 + sqrt(2 pi) lambda0 is not positive");
  }
  const double x = d.value();
  const double L = std::log(x);
  const double bracket = 1.5 - std::log(kPi) / (2.0 * L) - 1.0 / (2.0 * L) - x / (2.0 * L);
  return 4.0 * (1.0 + std::sqrt(2.0 * kPi) * eps2) /
         (std::sqrt(1.0 - 2.0 / N) * denom) * bracket * (-x * L);
}

double lambda0(const Density& density, int N, const FourierPlan& plan) {
  return std::sqrt(N * density.sigma2()) * conv_power(density, N, N, plan) -
         1.0 / std::sqrt(2.0 * kPi);
}

ProductionReport gamma_ratio(const Density& density, int N,
                             const FourierPlan& plan, const NumeratorGrid& grid) {
  if (std::abs(density.delta() - 0.5) <= 1e-12) {
    fail(ErrorCode::kUndefined,
         "gamma_ratio: undefined at delta = 1/2 (equilibrium state)");
  }
  ProductionReport r;
  r.N = N;
  r.delta = density.delta();
  r.entropy = entropy(density, N, plan).H;
  if (r.entropy < 1e-9) {
    fail(ErrorCode::kUndefined, "gamma_ratio: entropy below 1e-9");
  }
  const auto num = production_numerator(density, N, plan, grid);
  r.numerator = num.value;
  r.numerator_per_particle = num.per_particle;
  r.ratio = r.numerator / r.entropy;
  r.ratio_lower_bound = 2.0 / (N - 1.0);
  if (r.ratio < r.ratio_lower_bound - 1e-9) {
    fail(ErrorCode::kInconsistent,
         "gamma_ratio: ratio " + std::to_string(r.ratio) +
             " below the lower bound 2/(N-1)");
  }
  return r;
}

ScalingFit villani_scaling_check(const std::vector<ScalingPoint>& points,
                                 double beta) {
  require(points.size() >= 5, ErrorCode::kInsufficientData,
          "villani_scaling_check: at least 5 sweep points required");
  for (std::size_t i = 1; i < points.size(); ++i) {
    require(points[i].N > points[i - 1].N, ErrorCode::kDomain,
            "villani_scaling_check: N must be increasing");
  }
  ScalingFit fit;
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  std::vector<double> x, y;
  for (const auto& p : points) {
    require(p.ratio > 0.0 && p.N >= 2, ErrorCode::kDomain,
            "villani_scaling_check: ratios must be positive");
    const double ln = std::log(static_cast<double>(p.N));
    x.push_back(ln);
    y.push_back(std::log(p.ratio / ln));
    sx += x.back();
    sy += y.back();
    fit.normalized.push_back(p.ratio * std::pow(p.N, 1.0 - 2.0 * beta) / ln);
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  fit.slope = sxy / sxx;
  const auto [lo, hi] = std::minmax_element(fit.normalized.begin(), fit.normalized.end());
  fit.spread = *hi / *lo;
  return fit;
}

}  // namespace kaclab
