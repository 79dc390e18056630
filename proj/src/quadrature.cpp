#include "kaclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kaclab/error.hpp"

namespace kaclab {

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, unsigned max_depth) {
  using boost::math::quadrature::gauss_kronrod;
  QuadratureResult r;
  if (a == b) return r;
  r.value = gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol,
                                                 &r.error, &r.l1);
  return r;
}

QuadratureResult integrate_piecewise(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     double rel_tol, unsigned max_depth) {
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    const auto part = integrate(f, a, b, rel_tol, max_depth);
    total.value += part.value;
    total.error += part.error;
    total.l1 += part.l1;
  }
  return total;
}

namespace {

template <int Order>
void fill_panels(double a, double b, int panels, QuadratureRule& rule) {
  using Gauss = boost::math::quadrature::gauss<double, Order>;
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    // Boost stores the non-negative half of a symmetric rule.
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] == 0.0) continue;
      rule.nodes.push_back(mid - half * x[i]);
      rule.weights.push_back(half * w[i]);
    }
    if (x[0] == 0.0) {
      rule.nodes.push_back(mid);
      rule.weights.push_back(half * w[0]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) continue;
      rule.nodes.push_back(mid + half * x[i]);
      rule.weights.push_back(half * w[i]);
    }
  }
}

}  // namespace

QuadratureRule gauss_legendre_panels(double a, double b, int panels,
                                     int order) {
  require(panels >= 1 && b > a, ErrorCode::kDomain,
          "gauss_legendre_panels: need b > a and at least one panel");
  QuadratureRule rule;
  switch (order) {
    case 8: fill_panels<8>(a, b, panels, rule); break;
    case 16: fill_panels<16>(a, b, panels, rule); break;
    case 32: fill_panels<32>(a, b, panels, rule); break;
    default:
      fail(ErrorCode::kDomain, "gauss_legendre_panels: order must be 8, 16 or 32");
  }
  return rule;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) +
         pairwise_sum(values.subspan(half));
}

std::vector<double> chebyshev_lobatto(double a, double b, int count) {
  require(count >= 2, ErrorCode::kDomain, "chebyshev_lobatto: count >= 2");
  std::vector<double> x(count);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int k = 0; k < count; ++k) {
    x[k] = mid - half * std::cos(std::numbers::pi * k / (count - 1));
  }
  x.front() = a;
  x.back() = b;
  return x;
}

}  // namespace kaclab
