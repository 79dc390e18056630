#pragma once

// Closed-form right-hand sides of the frequency-split estimates and the two
// elementary appendix inequalities they rest on.

#include <array>

#include "kaclab/densities.hpp"

namespace kaclab {

struct BoundCertificate {
  enum class Region { kOutside, kInside, kTotal };
  Region region = Region::kTotal;
  int N = 0;
  double delta = 0.0;
  double c = 0.0;
  double beta = 0.0;
  double sigma2 = 0.0;
  double alpha = 0.0;
  double alpha_beta = 0.0;
  double M0 = 0.0, M1 = 0.0, M2 = 0.0;
  double tail = 0.0;
  std::array<double, 4> terms{};  // individual right-hand-side terms
  double value = 0.0;
};

// 2 tail + (1 - alpha)^{N/2 - 1} / (pi c delta Sigma^2)
//   + exp(-(1 + N) pi^2 c^2 delta^2 Sigma^2) / (pi c delta Sigma^2).
BoundCertificate bound_outside(int N, Delta d, double c, double sigma2,
                               double alpha, double tail);

// Four-term right-hand side for |xi| < c delta, with M = M0 + M1 delta + M2 delta^2.
BoundCertificate bound_inside(int N, Delta d, double c, double beta,
                              double sigma2, double alpha_beta, double M0,
                              double M1, double M2);

BoundCertificate bound_total(const BoundCertificate& outside,
                             const BoundCertificate& inside);

struct GaussianIntegralBounds {
  double lower_printed = 0.0;  // (sqrt(2 pi)/a) sqrt(1 - e^{-a eta^2 / 2})
  double lower = 0.0;          // (sqrt(2 pi)/a) sqrt(1 - e^{-a^2 eta^2 / 2})
  double middle = 0.0;         // int_{|x| < eta} e^{-a^2 x^2 / 2} dx
  double upper = 0.0;          // (sqrt(2 pi)/a) sqrt(1 - e^{-a^2 eta^2})
  double tail_bound = 0.0;     // (sqrt(2 pi)/a) e^{-a^2 eta^2 / 2}
  double tail_exact = 0.0;     // int_{|x| > eta} e^{-a^2 x^2 / 2} dx
  bool holds = false;          // lower <= middle <= upper and tail_exact <= tail_bound
  bool printed_lower_holds = false;
};
GaussianIntegralBounds gaussian_integral_bounds(double a, double eta);

struct SpecialSumBounds {
  double sum1 = 0.0;    // sum_{k = k0+1}^{m} e^{-a^2 k / 2} / sqrt(k)
  double bound1 = 0.0;  // sqrt(2 pi) e^{-a^2 k0 / 2} / a
  double sum2 = 0.0;    // sum_{k = k0+1}^{m} 1 / sqrt(k)
  double bound2 = 0.0;  // 2 sqrt(m)
  bool holds = false;
};
SpecialSumBounds special_sum_bounds(double a, long k0, long m);

}  // namespace kaclab
