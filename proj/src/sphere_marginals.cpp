#include "kaclab/sphere_marginals.hpp"

#include <algorithm>
#include <cmath>

#include "kaclab/error.hpp"
#include "kaclab/parallel.hpp"
#include "kaclab/quadrature.hpp"
#include "kaclab/rng.hpp"

namespace kaclab {

MarginalKernel::MarginalKernel(const Density& density, int N, int j,
                               const FourierPlan& plan)
    : density_(density), N_(N), j_(j) {
  require(j == 1 || j == 2, ErrorCode::kDomain, "MarginalKernel: j must be 1 or 2");
  require(N - j >= std::max(5, minimum_order(density)), ErrorCode::kUnsupportedOrder,
          "MarginalKernel: need N >= j + 5");
  table_ = marginal_table(density, N, j, plan);
  log_z_N_ = log_Z(density, N, static_cast<double>(N), plan).logZ.log_magnitude();
  log_prefactor_ = log_sphere_area(N - j).log_magnitude() -
                   log_sphere_area(N).log_magnitude() - 0.5 * (N - 2) * std::log(N);
}

double MarginalKernel::clamped_u(double s) const {
  return std::max(N_ - s, 1e-8 * N_);
}

LogValue MarginalKernel::log_weight(double s) const {
  require(s >= 0.0 && s < N_, ErrorCode::kDomain,
          "marginal_log_weight: need 0 <= s < N");
  const int n = N_ - j_;
  const double u = clamped_u(s);
  const double log_z_n = std::log(2.0) + table_->log_h(u) -
                         log_sphere_area(n).log_magnitude() - (0.5 * n - 1.0) * std::log(u);
  return LogValue::from_log(log_prefactor_ + 0.5 * (n - 2) * std::log(u) + log_z_n -
                            log_z_N_);
}

LogValue marginal_log_weight(int N, int j, double s, const Density& density,
                             const FourierPlan& plan) {
  return MarginalKernel(density, N, j, plan).log_weight(s);
}

double marginal_p1(const MarginalKernel& k1, double v) {
  if (v * v >= k1.N()) return 0.0;
  return std::exp(k1.density().log_pdf(v) + k1.log_weight(v * v).log_magnitude());
}

double marginal_p2(const MarginalKernel& k2, double v1, double v2) {
  const double s = v1 * v1 + v2 * v2;
  if (s >= k2.N()) return 0.0;
  return std::exp(k2.density().log_pdf(v1) + k2.density().log_pdf(v2) +
                  k2.log_weight(s).log_magnitude());
}

double marginal_cutoff(const Density& density, int N) {
  return std::min(std::sqrt(static_cast<double>(N)),
                  std::sqrt(40.0 * density.largest_variance()));
}

namespace {

std::vector<double> radial_breakpoints(const Density& density, double vmax) {
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

// int_0^{2 pi} f(r cos phi) f(r sin phi) d phi by the periodic trapezoid rule,
// doubled until two successive values agree to 1e-13.
double angular_product(const Density& d, double r) {
  auto trap = [&](int m) {
    std::vector<double> t(m);
    for (int k = 0; k < m; ++k) {
      const double phi = 2.0 * kPi * k / m;
      t[k] = d.pdf(r * std::cos(phi)) * d.pdf(r * std::sin(phi));
    }
    return 2.0 * kPi / m * pairwise_sum(t);
  };
  double prev = trap(64);
  for (int m = 128; m <= (1 << 16); m *= 2) {
    const double cur = trap(m);
    if (std::abs(cur - prev) <= 1e-13 * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

double p1_mass(const MarginalKernel& k1) { return p1_moment(k1, 0); }

double p1_moment(const MarginalKernel& k1, int m) {
  const double vmax = marginal_cutoff(k1.density(), k1.N());
  auto f = [&](double v) { return std::pow(v * v, m) * marginal_p1(k1, v); };
  return 2.0 * integrate_piecewise(f, radial_breakpoints(k1.density(), vmax), 1e-10, 10).value;
}

double p2_mass(const MarginalKernel& k2) {
  const double rmax = marginal_cutoff(k2.density(), k2.N());
  auto f = [&](double r) {
    const double s = r * r;
    if (s >= k2.N()) return 0.0;
    return r * k2.weight(s) * angular_product(k2.density(), r);
  };
  return integrate_piecewise(f, radial_breakpoints(k2.density(), rmax), 1e-9, 10).value;
}

double p2_section(const MarginalKernel& k2, double v1) {
  const double rest = k2.N() - v1 * v1;
  if (rest <= 0.0) return 0.0;
  const double vmax = std::min(std::sqrt(rest), marginal_cutoff(k2.density(), k2.N()));
  auto f = [&](double v2) { return marginal_p2(k2, v1, v2); };
  return 2.0 * integrate_piecewise(f, radial_breakpoints(k2.density(), vmax), 1e-10, 10).value;
}

void uniform_sphere_sample(CounterRng& rng, double radius, std::span<double> out) {
  for (;;) {
    double s = 0.0;
    for (double& x : out) {
      x = rng.normal();
      s += x * x;
    }
    if (s == 0.0) continue;
    const double scale = radius / std::sqrt(s);
    for (double& x : out) x *= scale;
    return;
  }
}

std::vector<double> uniform_sphere_sample(int N, double radius, std::uint64_t seed) {
  require(N >= 2 && radius > 0.0, ErrorCode::kDomain,
          "uniform_sphere_sample: need N >= 2 and positive radius");
  CounterRng rng(seed);
  std::vector<double> v(N);
  uniform_sphere_sample(rng, radius, v);
  return v;
}

ImportanceEstimate importance_expectation(const Observable& observable, int N,
                                          const Density& density, long samples,
                                          std::uint64_t seed, int threads) {
  require(N >= 2 && N <= 64, ErrorCode::kDomain,
          "importance_expectation: supported for 2 <= N <= 64");
  require(samples >= 10000, ErrorCode::kDomain,
          "importance_expectation: at least 1e4 samples required");
  constexpr int kChains = kImportanceChains;
  std::vector<std::vector<double>> lw(kChains), phi(kChains);
  const double radius = std::sqrt(static_cast<double>(N));
  parallel_for(kChains, threads, [&](int c) {
    const long count = samples / kChains + (c < samples % kChains ? 1 : 0);
    CounterRng rng(seed ^ static_cast<std::uint64_t>(c));
    std::vector<double> v(N);
    lw[c].resize(count);
    phi[c].resize(count);
    for (long i = 0; i < count; ++i) {
      uniform_sphere_sample(rng, radius, v);
      double l = 0.0;
      for (double x : v) l += density.log_pdf(x);
      lw[c][i] = l;
      phi[c][i] = observable(v);
    }
  });
  std::vector<double> all_lw, all_phi;
  all_lw.reserve(samples);
  all_phi.reserve(samples);
  for (int c = 0; c < kChains; ++c) {
    all_lw.insert(all_lw.end(), lw[c].begin(), lw[c].end());
    all_phi.insert(all_phi.end(), phi[c].begin(), phi[c].end());
  }
  const double top = *std::max_element(all_lw.begin(), all_lw.end());

  constexpr int kBlocks = 64;
  const long n = static_cast<long>(all_lw.size());
  std::vector<double> bw(kBlocks, 0.0), bwp(kBlocks, 0.0);
  double sw2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const double w = std::exp(all_lw[i] - top);
    const int b = static_cast<int>(i * kBlocks / n);
    bw[b] += w;
    bwp[b] += w * all_phi[i];
    sw2 += w * w;
  }
  const double W = pairwise_sum(bw), WP = pairwise_sum(bwp);
  ImportanceEstimate out;
  out.samples = n;
  out.estimate = WP / W;
  out.ess = W * W / sw2;
  std::vector<double> loo(kBlocks);
  for (int b = 0; b < kBlocks; ++b) loo[b] = (WP - bwp[b]) / (W - bw[b]);
  const double mean = pairwise_sum(loo) / kBlocks;
  double ss = 0.0;
  for (double x : loo) ss += (x - mean) * (x - mean);
  out.standard_error = std::sqrt((kBlocks - 1.0) / kBlocks * ss);
  if (out.ess < 100.0) {
    fail(ErrorCode::kUnreliable,
         "importance_expectation: effective sample size " +
             std::to_string(out.ess) + " below 100");
  }
  return out;
}

}  // namespace kaclab
