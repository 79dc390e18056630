#include "kaclab/bounds.hpp"

#include <cmath>
#include <vector>

#include "kaclab/error.hpp"
#include "kaclab/quadrature.hpp"

namespace kaclab {

BoundCertificate bound_outside(int N, Delta d, double c, double sigma2,
                               double alpha, double tail) {
  require(N >= 5 && c > 0.0 && sigma2 > 0.0, ErrorCode::kDomain,
          "bound_outside: need N >= 5, c > 0, sigma2 > 0");
  require(alpha >= 0.0 && alpha <= 1.0 && tail >= 0.0, ErrorCode::kDomain,
          "bound_outside: alpha in [0, 1] and tail >= 0 required");
  BoundCertificate b;
  b.region = BoundCertificate::Region::kOutside;
  b.N = N;
  b.delta = d.value();
  b.c = c;
  b.sigma2 = sigma2;
  b.alpha = alpha;
  b.tail = tail;
  const double cd = c * b.delta;
  const double denom = kPi * cd * sigma2;
  b.terms[0] = 2.0 * tail;
  b.terms[1] = alpha >= 1.0 ? 0.0 : std::pow(1.0 - alpha, 0.5 * N - 1.0) / denom;
  b.terms[2] = std::exp(-(1.0 + N) * kPi * kPi * cd * cd * sigma2) / denom;
  b.value = b.terms[0] + b.terms[1] + b.terms[2];
  return b;
}

BoundCertificate bound_inside(int N, Delta d, double c, double beta,
                              double sigma2, double alpha_beta, double M0,
                              double M1, double M2) {
  require(N >= 5 && c > 0.0 && sigma2 > 0.0 && beta > 0.0, ErrorCode::kDomain,
          "bound_inside: need N >= 5, c > 0, beta > 0, sigma2 > 0");
  require(alpha_beta >= 0.0 && alpha_beta <= 1.0, ErrorCode::kDomain,
          "bound_inside: alpha_beta must lie in [0, 1]");
  require(M0 >= 0.0 && M1 >= 0.0 && M2 >= 0.0, ErrorCode::kDomain,
          "bound_inside: M constants must be nonnegative");
  BoundCertificate b;
  b.region = BoundCertificate::Region::kInside;
  b.N = N;
  b.delta = d.value();
  b.c = c;
  b.beta = beta;
  b.sigma2 = sigma2;
  b.alpha_beta = alpha_beta;
  b.M0 = M0;
  b.M1 = M1;
  b.M2 = M2;
  const double dl = b.delta;
  const double m = M0 + M1 * dl + M2 * dl * dl;
  const double c3 = c * c * c;
  const double sqN = std::sqrt(static_cast<double>(N));
  b.terms[0] = c3 * c * dl * dl * m / 2.0;
  b.terms[1] = alpha_beta >= 1.0
                   ? 0.0
                   : c3 * dl * sqN * m * std::pow(1.0 - alpha_beta, 0.5 * N - 1.0) /
                         std::sqrt(kPi * sigma2);
  const double q = -std::expm1(-2.0 * kPi * kPi * N * c * c * dl * dl * sigma2);
  b.terms[2] = c3 * std::pow(dl, 1.0 - beta) * m *
               std::exp(-kPi * kPi * (N - 1.0) * c * c * std::pow(dl, 2.0 + 2.0 * beta) * sigma2) /
               (2.0 * kPi * c * dl * sigma2 * std::sqrt(q));
  b.terms[3] = 2.0 * c3 * m * sqN * std::pow(dl, 1.0 + 3.0 * beta) /
               std::sqrt(2.0 * kPi * sigma2);
  b.value = b.terms[0] + b.terms[1] + b.terms[2] + b.terms[3];
  return b;
}

BoundCertificate bound_total(const BoundCertificate& outside,
                             const BoundCertificate& inside) {
  BoundCertificate t = inside;
  t.region = BoundCertificate::Region::kTotal;
  t.alpha = outside.alpha;
  t.tail = outside.tail;
  t.terms = {outside.value, inside.value, 0.0, 0.0};
  t.value = outside.value + inside.value;
  return t;
}

GaussianIntegralBounds gaussian_integral_bounds(double a, double eta) {
  require(a > 0.0 && eta > 0.0, ErrorCode::kDomain,
          "gaussian_integral_bounds: a and eta must be positive");
  GaussianIntegralBounds g;
  const double full = std::sqrt(2.0 * kPi) / a;
  g.lower_printed = full * std::sqrt(-std::expm1(-a * eta * eta / 2.0));
  g.lower = full * std::sqrt(-std::expm1(-a * a * eta * eta / 2.0));
  g.upper = full * std::sqrt(-std::expm1(-a * a * eta * eta));
  g.tail_bound = full * std::exp(-a * a * eta * eta / 2.0);
  auto f = [a](double x) { return std::exp(-a * a * x * x / 2.0); };
  g.middle = 2.0 * integrate(f, 0.0, eta, 1e-14).value;
  g.tail_exact = 2.0 * integrate(f, eta, HUGE_VAL, 1e-14).value;
  g.holds = g.lower <= g.middle && g.middle <= g.upper && g.tail_exact <= g.tail_bound;
  g.printed_lower_holds = g.lower_printed <= g.middle;
  return g;
}

SpecialSumBounds special_sum_bounds(double a, long k0, long m) {
  require(a > 0.0 && k0 >= 0 && k0 < m, ErrorCode::kDomain,
          "special_sum_bounds: need a > 0 and 0 <= k0 < m");
  SpecialSumBounds s;
  std::vector<double> t1, t2;
  t1.reserve(m - k0);
  t2.reserve(m - k0);
  for (long k = k0 + 1; k <= m; ++k) {
    const double r = 1.0 / std::sqrt(static_cast<double>(k));
    t1.push_back(std::exp(-a * a * k / 2.0) * r);
    t2.push_back(r);
  }
  s.sum1 = pairwise_sum(t1);
  s.sum2 = pairwise_sum(t2);
  s.bound1 = std::sqrt(2.0 * kPi) * std::exp(-a * a * k0 / 2.0) / a;
  s.bound2 = 2.0 * std::sqrt(static_cast<double>(m));
  s.holds = s.sum1 <= s.bound1 && s.sum2 <= s.bound2;
  return s;
}

}  // namespace kaclab
