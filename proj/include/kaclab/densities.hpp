#pragma once

// One-particle densities of the Kac test state.
//
// Both supported densities are scale mixtures of centered Gaussians,
//   f(v) = sum_k w_k M_{a_k}(v),
// so the law of V^2 has Laplace transform
//   L(s) = E[exp(-s V^2)] = sum_k w_k (1 + s / lambda_k)^{-1/2},  lambda_k = 1/(2 a_k),
// and the characteristic function of V^2 (Fourier sign convention e^{-2 pi i xi u})
// is g(xi) = L(2 pi i xi). Everything downstream is written against this form.

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace kaclab {

inline constexpr double kPi = std::numbers::pi;

// Centered Gaussian density with variance a.
double maxwellian(double a, double v);
double log_maxwellian(double a, double v);

// Mixture weight of the energetic component, 0 < delta <= 1/2.
class Delta {
 public:
  static Delta make(double delta);
  double value() const noexcept { return value_; }
  bool is_collapsed() const noexcept;  // delta == 1/2 up to 1e-12

 private:
  explicit Delta(double v) : value_(v) {}
  double value_;
};

struct ScheduledDelta {
  Delta delta;
  int N;
  double beta;
  // Diagnostics for the validity conditions delta^{1+2b} N -> inf and
  // delta^{1+3b} N -> 0.
  double lower_condition;
  double upper_condition;
};

// delta_N = N^{-(1 - 2 beta)}, 0 < beta < 1/6, N >= 5.
ScheduledDelta delta_schedule(int N, double beta);

struct GaussianComponent {
  double weight;
  double variance;  // a_k
  double rate() const { return 0.5 / variance; }  // lambda_k
};

class Density {
 public:
  enum class Kind { kKacMixture, kStandardGaussian };

  static Density kac_mixture(Delta delta);
  static Density standard_gaussian();

  Kind kind() const noexcept { return kind_; }
  // Mixture parameter; 1/2 for the Gaussian (its mixture collapses to it).
  double delta() const noexcept { return delta_; }
  const std::vector<GaussianComponent>& components() const noexcept {
    return components_;
  }

  double pdf(double v) const;
  double log_pdf(double v) const;

  // Density h(u) = f(sqrt u)/sqrt u of V^2. u must be positive.
  double square_law_pdf(double u) const;

  std::complex<double> laplace(std::complex<double> s) const;
  std::complex<double> log_laplace(std::complex<double> s) const;
  std::complex<double> char_fn(double xi) const;

  // Variance of V^2 (Sigma^2) and E[V^4], E[V^6].
  double sigma2() const;
  double moment4() const;
  double moment6() const;

  double smallest_rate() const;
  double largest_rate() const;
  double largest_variance() const;

  // Half-width of the v-interval used for moment quadrature.
  double quadrature_half_width() const;

  std::string describe() const;

 private:
  Density(Kind kind, double delta, std::vector<GaussianComponent> comps)
      : kind_(kind), delta_(delta), components_(std::move(comps)) {}

  Kind kind_;
  double delta_;
  std::vector<GaussianComponent> components_;
};

double f_delta(Delta d, double v);
double h_delta(Delta d, double u);
std::complex<double> char_fn(const Density& density, double xi);

// 3/(4 delta (1 - delta)) - 1.
double sigma2(Delta d);
// int v^4 f_delta = 3/(4 delta (1 - delta)).
double fourth_moment(Delta d);

struct DensityMoments {
  double mass;
  double second;
  double fourth;
};

// Moments of f by adaptive quadrature (independent of the closed forms).
DensityMoments density_moments_quadrature(const Density& density);

// int_0^inf u^k h(u) du, k = 0, 1, 2, by quadrature in u.
double square_law_moment_quadrature(const Density& density, int k);

// g(xi) by direct quadrature of int_0^inf h(u) e^{-2 pi i xi u} du.
std::complex<double> char_fn_quadrature(const Density& density, double xi);

}  // namespace kaclab
