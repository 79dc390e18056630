#pragma once

#include <functional>
#include <span>
#include <vector>

namespace kaclab {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // integral of |f|
};

// Adaptive Gauss-Kronrod (15 point) on [a, b]; b may be +infinity.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-12,
                           unsigned max_depth = 18);

// Adaptive quadrature on each interval between consecutive breakpoints,
// summed left to right.
QuadratureResult integrate_piecewise(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     double rel_tol = 1e-12,
                                     unsigned max_depth = 18);

// Composite Gauss-Legendre rule: `panels` equal panels of `order` points.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre_panels(double a, double b, int panels,
                                     int order = 16);

// Fixed-order pairwise summation.
double pairwise_sum(std::span<const double> values);

// Chebyshev-Lobatto points on [a, b], ascending.
std::vector<double> chebyshev_lobatto(double a, double b, int count);

}  // namespace kaclab
