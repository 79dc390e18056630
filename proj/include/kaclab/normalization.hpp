#pragma once

// Log-domain normalization functions Z_N(f, sqrt(u)) and sphere areas.
// u always denotes a squared radius.

#include <memory>
#include <vector>

#include "kaclab/clt_engine.hpp"
#include "kaclab/densities.hpp"
#include "kaclab/log_value.hpp"

namespace kaclab {

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2).
LogValue log_sphere_area(int n);

struct ZEvaluation {
  enum class Method { kInversion, kGaussianLlt };
  int N = 0;
  double u = 0.0;
  LogValue logZ;
  Method method = Method::kInversion;
  double rel_error = 0.0;  // relative error estimate of Z (inversion only)
};

// Z_N(f, sqrt u) = 2 h^{*N}(u) / (|S^{N-1}| u^{N/2 - 1}).
ZEvaluation log_Z(const Density& density, int N, double u,
                  const FourierPlan& plan = {});

// The same expression with h^{*(N-j)} replaced by its Gaussian comparator.
ZEvaluation log_Z_gaussian(const Density& density, int N, int j, double u);

// log Z_{N-j}(sqrt u) - log Z_N(sqrt N), 0 < u <= N.
LogValue log_Z_ratio(const Density& density, int N, int j, double u,
                     const FourierPlan& plan = {});

// Interpolation table for log h^{*n} on [u_low, u_high]. Stored as
// r(u) = log h^{*n}(u) - (n/2 - 1) log u, which is analytic down to u = 0,
// on Chebyshev-Lobatto nodes with local cubic interpolation. The node count
// starts at 513 (512 intervals) and doubles until 32 off-grid checks agree with direct
// evaluation to 1e-7 in log.
class ConvolutionTable {
 public:
  ConvolutionTable(const Density& density, int n, double u_low, double u_high,
                   const FourierPlan& plan);

  // Interpolated inside [u_low, u_high], direct inversion outside.
  double log_h(double u) const;

  int n() const noexcept { return n_; }
  int nodes() const noexcept { return static_cast<int>(u_.size()); }
  double u_low() const noexcept { return u_.front(); }
  double u_high() const noexcept { return u_.back(); }
  double check_error() const noexcept { return check_error_; }

 private:
  double interpolate(double u) const;
  void build(int count);

  Density density_;
  FourierPlan plan_;
  int n_;
  std::vector<double> u_;
  std::vector<double> r_;
  double check_error_ = 0.0;
};

// Shared, write-once cache of tables keyed by (density, n, range, plan).
std::shared_ptr<const ConvolutionTable> convolution_table(
    const Density& density, int n, double u_low, double u_high,
    const FourierPlan& plan = {});

// Default table range for order n = N - j: [max(1e-8 N, n - 10 sqrt(n) Sigma), N].
std::shared_ptr<const ConvolutionTable> marginal_table(const Density& density,
                                                       int N, int j,
                                                       const FourierPlan& plan = {});

void clear_convolution_cache();

}  // namespace kaclab
