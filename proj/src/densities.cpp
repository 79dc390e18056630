#include "kaclab/densities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "kaclab/error.hpp"
#include "kaclab/quadrature.hpp"

namespace kaclab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kUnsupportedOrder: return "unsupported order";
    case ErrorCode::kConfig: return "config error";
    case ErrorCode::kInsufficientData: return "insufficient data";
    case ErrorCode::kIndeterminate: return "indeterminate sign";
    case ErrorCode::kUnreliable: return "unreliable estimate";
    case ErrorCode::kInconsistent: return "inconsistency";
    case ErrorCode::kRefinement: return "refinement error";
    case ErrorCode::kCertificateUnavailable: return "certificate unavailable";
    case ErrorCode::kUndefined: return "undefined";
    case ErrorCode::kTailTolerance: return "tail tolerance unreachable";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

double maxwellian(double a, double v) {
  require(a > 0.0, ErrorCode::kDomain, "maxwellian: variance must be positive");
  return std::exp(-v * v / (2.0 * a)) / std::sqrt(2.0 * kPi * a);
}

double log_maxwellian(double a, double v) {
  require(a > 0.0, ErrorCode::kDomain, "maxwellian: variance must be positive");
  return -v * v / (2.0 * a) - 0.5 * std::log(2.0 * kPi * a);
}

Delta Delta::make(double delta) {
  require(std::isfinite(delta) && delta > 0.0 && delta <= 0.5,
          ErrorCode::kDomain, "delta must lie in (0, 1/2]");
  return Delta(delta);
}

bool Delta::is_collapsed() const noexcept {
  return std::abs(value_ - 0.5) <= 1e-12;
}

ScheduledDelta delta_schedule(int N, double beta) {
  require(N >= 5, ErrorCode::kDomain, "delta_schedule: N must be at least 5");
  require(beta > 0.0 && beta < 1.0 / 6.0, ErrorCode::kDomain,
          "delta_schedule: beta must lie in (0, 1/6)");
  const double d = std::pow(static_cast<double>(N), -(1.0 - 2.0 * beta));
  require(d <= 0.5, ErrorCode::kDomain, "delta_schedule: delta exceeds 1/2");
  return ScheduledDelta{Delta::make(d), N, beta,
                        std::pow(d, 1.0 + 2.0 * beta) * N,
                        std::pow(d, 1.0 + 3.0 * beta) * N};
}

Density Density::kac_mixture(Delta delta) {
  const double d = delta.value();
  return Density(Kind::kKacMixture, d,
                 {{d, 1.0 / (2.0 * d)}, {1.0 - d, 1.0 / (2.0 * (1.0 - d))}});
}

Density Density::standard_gaussian() {
  return Density(Kind::kStandardGaussian, 0.5, {{1.0, 1.0}});
}

double Density::pdf(double v) const {
  double s = 0.0;
  for (const auto& c : components_) s += c.weight * maxwellian(c.variance, v);
  return s;
}

double Density::log_pdf(double v) const {
  double terms[2];
  double top = -HUGE_VAL;
  const std::size_t n = components_.size();
  for (std::size_t k = 0; k < n; ++k) {
    terms[k] = std::log(components_[k].weight) +
               log_maxwellian(components_[k].variance, v);
    top = std::max(top, terms[k]);
  }
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += std::exp(terms[k] - top);
  return top + std::log(s);
}

double Density::square_law_pdf(double u) const {
  require(u > 0.0, ErrorCode::kDomain, "h(u) requires u > 0");
  const double r = std::sqrt(u);
  return pdf(r) / r;
}

std::complex<double> Density::laplace(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (const auto& c : components_) {
    acc += c.weight / std::sqrt(1.0 + s / c.rate());
  }
  return acc;
}

std::complex<double> Density::log_laplace(std::complex<double> s) const {
  return std::log(laplace(s));
}

std::complex<double> Density::char_fn(double xi) const {
  // 1 + 2 pi i xi / lambda has real part 1, so the principal root is the
  // analytic continuation from xi = 0.
  return laplace(std::complex<double>(0.0, 2.0 * kPi * xi));
}

double Density::moment4() const {
  double m = 0.0;
  for (const auto& c : components_) m += c.weight * 3.0 * c.variance * c.variance;
  return m;
}

double Density::moment6() const {
  double m = 0.0;
  for (const auto& c : components_) {
    m += c.weight * 15.0 * c.variance * c.variance * c.variance;
  }
  return m;
}

double Density::sigma2() const {
  double m2 = 0.0;
  for (const auto& c : components_) m2 += c.weight * c.variance;
  return moment4() - m2 * m2;
}

double Density::smallest_rate() const {
  double r = HUGE_VAL;
  for (const auto& c : components_) r = std::min(r, c.rate());
  return r;
}

double Density::largest_rate() const {
  double r = 0.0;
  for (const auto& c : components_) r = std::max(r, c.rate());
  return r;
}

double Density::largest_variance() const {
  double a = 0.0;
  for (const auto& c : components_) a = std::max(a, c.variance);
  return a;
}

double Density::quadrature_half_width() const {
  return std::max(12.0, 12.0 * std::sqrt(largest_variance()));
}

std::string Density::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::kStandardGaussian) {
    os << "StandardGaussian";
  } else {
    os << "KacMixture(delta=" << delta_ << ")";
  }
  return os.str();
}

double f_delta(Delta d, double v) { return Density::kac_mixture(d).pdf(v); }

double h_delta(Delta d, double u) {
  return Density::kac_mixture(d).square_law_pdf(u);
}

std::complex<double> char_fn(const Density& density, double xi) {
  return density.char_fn(xi);
}

double sigma2(Delta d) {
  const double x = d.value();
  return 3.0 / (4.0 * x * (1.0 - x)) - 1.0;
}

double fourth_moment(Delta d) {
  const double x = d.value();
  return 3.0 / (4.0 * x * (1.0 - x));
}

namespace {

std::vector<double> v_breakpoints(const Density& density) {
  std::vector<double> b{0.0};
  const double w = density.quadrature_half_width();
  for (const auto& c : density.components()) {
    const double s = std::sqrt(c.variance);
    for (double k : {1.0, 2.0, 4.0, 8.0}) {
      if (k * s < w) b.push_back(k * s);
    }
  }
  b.push_back(w);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace

DensityMoments density_moments_quadrature(const Density& density) {
  const auto bp = v_breakpoints(density);
  auto moment = [&](int k) {
    auto fk = [&](double v) { return std::pow(v, k) * density.pdf(v); };
    return 2.0 * integrate_piecewise(fk, bp, 1e-14).value;
  };
  return DensityMoments{moment(0), moment(2), moment(4)};
}

double square_law_moment_quadrature(const Density& density, int k) {
  require(k >= 0 && k <= 2, ErrorCode::kDomain, "moment order must be 0..2");
  const double w = density.quadrature_half_width();
  const double umax = w * w;
  // The u^{-1/2} endpoint singularity is handled by tanh-sinh; the interior
  // split keeps the long energetic tail well resolved.
  boost::math::quadrature::tanh_sinh<double> ts;
  auto fu = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::pow(u, k) * density.square_law_pdf(u);
  };
  std::vector<double> cuts{0.0};
  for (const auto& c : density.components()) {
    for (double m : {1.0, 4.0, 16.0, 64.0}) {
      if (m * c.variance < umax) cuts.push_back(m * c.variance);
    }
  }
  cuts.push_back(umax);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = ts.integrate(fu, cuts[0], cuts[1], 1e-14);
  std::vector<double> rest(cuts.begin() + 1, cuts.end());
  total += integrate_piecewise(fu, rest, 1e-14).value;
  return total;
}

std::complex<double> char_fn_quadrature(const Density& density, double xi) {
  // g(xi) = int_R f(v) exp(-2 pi i xi v^2) dv; panels end where the chirp
  // phase has advanced by pi/2 so each panel holds under a quarter wave.
  const double w = density.quadrature_half_width();
  std::vector<double> bp{0.0};
  const double ax = std::abs(xi);
  if (ax > 0.0) {
    const double step = 1.0 / (4.0 * ax);
    for (double k = 1.0;; k += 1.0) {
      const double v = std::sqrt(k * step);
      if (v >= w) break;
      bp.push_back(v);
    }
  }
  for (double v : v_breakpoints(density)) bp.push_back(v);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  // Each panel is smooth and under a quarter wave, so a fixed 32-point
  // Gauss-Legendre rule per panel (split to width <= 1/2) is at machine accuracy.
  double r = 0.0, i = 0.0;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const double a = bp[k], b = bp[k + 1];
    if (!(b > a)) continue;
    const int panels = static_cast<int>(std::ceil((b - a) / 0.5));
    const auto rule = gauss_legendre_panels(a, b, panels, 32);
    for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
      const double v = rule.nodes[n];
      const double f = rule.weights[n] * density.pdf(v);
      const double phase = 2.0 * kPi * xi * v * v;
      r += f * std::cos(phase);
      i -= f * std::sin(phase);
    }
  }
  return {2.0 * r, 2.0 * i};
}

}  // namespace kaclab
