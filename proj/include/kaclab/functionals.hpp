#pragma once

// Relative entropy H_N(F_N), the production numerator <log F_N, N(I - Q) F_N>,
// their ratio, and the certificate built from the measured CLT constants.

#include <cstdint>
#include <vector>

#include "kaclab/clt_engine.hpp"
#include "kaclab/densities.hpp"
#include "kaclab/sphere_marginals.hpp"

namespace kaclab {

inline constexpr double kHalfLog2 = 0.34657359027997264;  // log(2) / 2

struct EntropyReport {
  int N = 0;
  double delta = 0.0;
  double H = 0.0;
  double per_particle = 0.0;
  double limit_gap = 0.0;  // |H/N - log(2)/2|
};

// H_N = N int P_1 log f dv - log Z_N(f, sqrt N).
EntropyReport entropy(const Density& density, int N, const FourierPlan& plan = {});

struct NumeratorGrid {
  int theta = 256;  // angular points (theta and phi share the count)
  int phi = 256;
  int radial = 128;  // Gauss-Legendre points: radial/16 panels of 16
};

struct NumeratorResult {
  double value = 0.0;
  double per_particle = 0.0;
  NumeratorGrid grid_used;  // resolution of the accepted value
  double last_change = 0.0;
};

// (N / 4 pi) int d theta int [G(R v) - G(v)] [g(R v) - g(v)] K_2(|v|^2) dv
// with g = f(v_1) f(v_2) and G = log g, evaluated in polar coordinates.
NumeratorResult production_numerator(const Density& density, int N,
                                     const FourierPlan& plan = {},
                                     const NumeratorGrid& grid = {});

// Monte Carlo estimate of the same quantity through importance sampling.
ImportanceEstimate mc_numerator(const Density& density, int N, long samples,
                                std::uint64_t seed, int threads = 0);

// Per-particle certificate from the numerator lemma:
// 4 (1 + sqrt(2 pi) eps2) / (sqrt(1 - 2/N) (1 + sqrt(2 pi) lambda0))
//   (3/2 - log pi / (2 log d) - 1 / (2 log d) - d / (2 log d)) (-d log d).
double paper_numerator_bound(int N, Delta d, double eps2, double lambda0);

// lambda_0(N, N) = sqrt(N) Sigma h^{*N}(N) - 1/sqrt(2 pi).
double lambda0(const Density& density, int N, const FourierPlan& plan = {});

struct ProductionReport {
  int N = 0;
  double delta = 0.0;
  double entropy = 0.0;
  double numerator = 0.0;
  double numerator_per_particle = 0.0;
  double ratio = 0.0;
  double ratio_lower_bound = 0.0;  // 2 / (N - 1)
};

// numerator / entropy; undefined at delta = 1/2 and when H_N < 1e-9.
ProductionReport gamma_ratio(const Density& density, int N,
                             const FourierPlan& plan = {},
                             const NumeratorGrid& grid = {});

struct ScalingFit {
  double slope = 0.0;   // least squares slope of log(ratio / log N) on log N
  double spread = 0.0;  // max / min of ratio N^{1-2 beta} / log N
  std::vector<double> normalized;
};

struct ScalingPoint {
  int N;
  double ratio;
};

ScalingFit villani_scaling_check(const std::vector<ScalingPoint>& points,
                                 double beta);

}  // namespace kaclab
