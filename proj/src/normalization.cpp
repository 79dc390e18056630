#include "kaclab/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "kaclab/error.hpp"
#include "kaclab/quadrature.hpp"
#include "kaclab/rng.hpp"

namespace kaclab {

LogValue log_sphere_area(int n) {
  require(n >= 1, ErrorCode::kDomain, "log_sphere_area: n must be positive");
  return LogValue::from_log(std::log(2.0) + 0.5 * n * std::log(kPi) -
                            std::lgamma(0.5 * n));
}

namespace {

double log_z_from_log_h(int N, double u, double log_h) {
  return std::log(2.0) + log_h - log_sphere_area(N).log_magnitude() -
         (0.5 * N - 1.0) * std::log(u);
}

}  // namespace

ZEvaluation log_Z(const Density& density, int N, double u,
                  const FourierPlan& plan) {
  require(u > 0.0, ErrorCode::kDomain, "log_Z: u must be positive");
  const auto h = conv_power_eval(density, N, u, plan);
  require(h.value > h.error || h.error == 0.0 ||
              (h.value == 0.0 && std::isfinite(h.log_value)),
          ErrorCode::kIndeterminate,
          "log_Z: convolution value does not exceed its error estimate");
  ZEvaluation z;
  z.N = N;
  z.u = u;
  z.logZ = LogValue::from_log(log_z_from_log_h(N, u, h.log_value));
  z.method = ZEvaluation::Method::kInversion;
  z.rel_error = h.value > 0.0 ? h.error / h.value : 0.0;
  return z;
}

ZEvaluation log_Z_gaussian(const Density& density, int N, int j, double u) {
  const int n = N - j;
  require(n >= 5, ErrorCode::kUnsupportedOrder, "log_Z_gaussian: need N - j >= 5");
  require(u > 0.0, ErrorCode::kDomain, "log_Z_gaussian: u must be positive");
  const double s2 = density.sigma2();
  const double log_llt = -0.5 * std::log(n * s2) - 0.5 * std::log(2.0 * kPi) -
                         (u - n) * (u - n) / (2.0 * n * s2);
  ZEvaluation z;
  z.N = n;
  z.u = u;
  z.logZ = LogValue::from_log(log_z_from_log_h(n, u, log_llt));
  z.method = ZEvaluation::Method::kGaussianLlt;
  return z;
}

LogValue log_Z_ratio(const Density& density, int N, int j, double u,
                     const FourierPlan& plan) {
  require(j >= 0 && N - j >= minimum_order(density), ErrorCode::kUnsupportedOrder,
          "log_Z_ratio: N - j below the minimum order");
  require(u > 0.0 && u <= N, ErrorCode::kDomain, "log_Z_ratio: need 0 < u <= N");
  const auto top = log_Z(density, N - j, u, plan).logZ;
  const auto bottom = log_Z(density, N, static_cast<double>(N), plan).logZ;
  return top / bottom;
}

ConvolutionTable::ConvolutionTable(const Density& density, int n, double u_low,
                                   double u_high, const FourierPlan& plan)
    : density_(density), plan_(plan), n_(n) {
  require(n >= minimum_order(density), ErrorCode::kUnsupportedOrder,
          "ConvolutionTable: order below minimum");
  require(u_low > 0.0 && u_high > u_low, ErrorCode::kDomain,
          "ConvolutionTable: need 0 < u_low < u_high");
  u_ = {u_low, u_high};
  // Node counts 2^k + 1 nest, so each doubling reuses the previous values.
  for (int count = 513;; count = 2 * count - 1) {
    build(count);
    CounterRng rng(0x7AB1E5EEDULL ^ static_cast<std::uint64_t>(n));
    const double mid = 0.5 * (u_low + u_high), half = 0.5 * (u_high - u_low);
    check_error_ = 0.0;
    for (int k = 0; k < 32; ++k) {
      const double u = std::clamp(mid - half * std::cos(kPi * rng.uniform()),
                                  u_low, u_high);
      const double direct = log_conv_power(density_, n_, u, plan_);
      check_error_ = std::max(check_error_, std::abs(interpolate(u) - direct));
    }
    if (check_error_ <= 1e-7) break;
    require(count < 16385, ErrorCode::kRefinement,
            "ConvolutionTable: interpolation budget 1e-7 not met at 16385 nodes");
  }
}

void ConvolutionTable::build(int count) {
  const double a = u_.front(), b = u_.back();
  const auto nodes = chebyshev_lobatto(a, b, count);
  std::vector<double> r(count);
  const bool nested = static_cast<int>(r_.size()) * 2 - 1 == count;
  for (int i = 0; i < count; ++i) {
    if (nested && i % 2 == 0) {
      r[i] = r_[i / 2];
      continue;
    }
    const double u = nodes[i];
    r[i] = log_conv_power(density_, n_, u, plan_) - (0.5 * n_ - 1.0) * std::log(u);
  }
  u_ = nodes;
  r_ = std::move(r);
}

double ConvolutionTable::interpolate(double u) const {
  const int count = static_cast<int>(u_.size());
  int i = static_cast<int>(std::upper_bound(u_.begin(), u_.end(), u) - u_.begin()) - 1;
  i = std::clamp(i - 1, 0, count - 4);
  double acc = 0.0;
  for (int a = i; a < i + 4; ++a) {
    double w = 1.0;
    for (int b = i; b < i + 4; ++b) {
      if (b != a) w *= (u - u_[b]) / (u_[a] - u_[b]);
    }
    acc += w * r_[a];
  }
  return acc + (0.5 * n_ - 1.0) * std::log(u);
}

double ConvolutionTable::log_h(double u) const {
  if (u < u_.front() || u > u_.back()) {
    return log_conv_power(density_, n_, u, plan_);
  }
  return interpolate(u);
}

namespace {

using TableKey = std::tuple<int, double, int, double, double, double, int>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<TableKey, std::shared_ptr<const ConvolutionTable>>& cache() {
  static std::map<TableKey, std::shared_ptr<const ConvolutionTable>> c;
  return c;
}

}  // namespace

std::shared_ptr<const ConvolutionTable> convolution_table(
    const Density& density, int n, double u_low, double u_high,
    const FourierPlan& plan) {
  const TableKey key{static_cast<int>(density.kind()), density.delta(), n, u_low,
                     u_high, plan.rel_tolerance, static_cast<int>(plan.path)};
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  // Built outside the lock; concurrent builders produce identical tables and
  // the first one stored wins.
  auto table = std::make_shared<const ConvolutionTable>(density, n, u_low, u_high, plan);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(key, std::move(table)).first->second;
}

std::shared_ptr<const ConvolutionTable> marginal_table(const Density& density,
                                                       int N, int j,
                                                       const FourierPlan& plan) {
  const int n = N - j;
  const double low = std::max(1e-8 * N, n - 10.0 * std::sqrt(n * density.sigma2()));
  return convolution_table(density, n, low, static_cast<double>(N), plan);
}

void clear_convolution_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().clear();
}

}  // namespace kaclab
