#pragma once

// Convolution powers h^{*n} of the square-law density and the measured
// constants of the local central limit argument.

#include <span>
#include <vector>

#include "kaclab/densities.hpp"

namespace kaclab {

// Default radius factor of the analytic region |xi| < c delta.
inline constexpr double kDefaultC = 1.0 / (4.0 * kPi);

enum class InversionPath {
  // Steepest-descent parabola through the saddle point of L(s)^n e^{su}.
  kSaddle,
  // 2 int_0^Xi Re(g^n e^{2 pi i xi u}) d xi on the real frequency line.
  kRealLine,
};

struct FourierPlan {
  double cutoff = 0.0;  // Xi for the real-line path; 0 picks it from the tail bound
  int panels = 64;
  double tail_tolerance = 1e-14;
  double rel_tolerance = 1e-12;
  InversionPath path = InversionPath::kSaddle;
};

struct ConvPowerValue {
  double value = 0.0;
  double log_value = 0.0;  // log of value; finite even when value underflows
  double error = 0.0;      // absolute error estimate (quadrature + tail)
  double cutoff = 0.0;     // contour half-length or Xi actually used
};

// Minimum order accepted for a density (5 for the mixture, 1 for the Gaussian).
int minimum_order(const Density& density);

ConvPowerValue conv_power_eval(const Density& density, int n, double u,
                               const FourierPlan& plan = {});
double conv_power(const Density& density, int n, double u,
                  const FourierPlan& plan = {});
double log_conv_power(const Density& density, int n, double u,
                      const FourierPlan& plan = {});

struct ConvolutionPowerEvaluation {
  int n = 0;
  std::vector<double> u;
  std::vector<double> values;
  double error = 0.0;  // largest absolute error estimate on the grid
};
ConvolutionPowerEvaluation conv_power_grid(const Density& density, int n,
                                           std::span<const double> u,
                                           const FourierPlan& plan = {});

// Saddle point s* of n log L(s) + s u, i.e. -L'(s*)/L(s*) = u/n.
double saddle_point(const Density& density, int n, double u);

// Gaussian comparator with mean n and variance n sigma2.
double gaussian_llt(int n, double sigma2, double u);

// lambda_j(N - j, u) = sqrt(n) Sigma h^{*n}(u) - exp(-(u - n)^2 / (2 n Sigma^2)) / sqrt(2 pi).
double lambda_dev(const Density& density, int N, int j, double u,
                  const FourierPlan& plan = {});

struct DeviationSup {
  double eps = 0.0;     // sup |lambda_j| on the bulk grid
  double argmax = 0.0;  // u at which it is attained
  double u_low = 0.0;
  double u_high = 0.0;
};
// Measured eps_j(N) over u in [n - 8 sqrt(n) Sigma, n + 8 sqrt(n) Sigma].
DeviationSup measured_eps(const Density& density, int N, int j,
                          const FourierPlan& plan = {});

// gamma_1(xi) = exp(-2 pi i xi) exp(-2 pi^2 xi^2 Sigma^2).
std::complex<double> gamma1(double xi, double sigma2);

// 1 - sup_{|xi| > c delta} |g(xi)|.
double alpha_outside(Delta d, double c = kDefaultC);
// 1 - sup_{c delta^{1+beta} < |xi| < c delta} |g(xi)|.
double alpha_annulus(Delta d, double beta, double c = kDefaultC);

struct MConstant {
  double M = 0.0;            // sup_{0 < |xi| < c delta} |g - gamma_1| / |xi|^3
  double xi_at_max = 0.0;
  double limit_ratio = 0.0;  // xi -> 0 value (4 pi^3 / 3) |kappa_3|
  double M_delta2 = 0.0;     // M delta^2, the M_0 coefficient when M_1 = M_2 = 0
};
MConstant m_constants(Delta d, double c = kDefaultC);

// int_{|xi| > c delta} |g(xi)|^n d xi.
double tail_integral(Delta d, int n, double c = kDefaultC);

struct RegionIntegrals {
  double inside = 0.0;   // int_{|xi| < c delta} |g^N - gamma_1^N|
  double outside = 0.0;  // int_{|xi| > c delta} |g^N - gamma_1^N|
};
RegionIntegrals measured_region_integrals(const Density& density, int N,
                                          double c = kDefaultC);

}  // namespace kaclab
