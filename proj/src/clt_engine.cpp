#include "kaclab/clt_engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "kaclab/error.hpp"
#include "kaclab/quadrature.hpp"

namespace kaclab {

using cplx = std::complex<double>;

namespace {

// Saddle location stored as shift = s* + lambda_min so that 1 + s/lambda_k
// keeps full relative precision for the hottest component.
struct Saddle {
  double s = 0.0;
  double shift = 0.0;
  double lambda_min = 0.0;
};

// Returns 1 + s/lambda_k written as ((lambda_k - lambda_min) + shift + z)/lambda_k.
inline cplx factor(const GaussianComponent& c, double lambda_min, double shift,
                   cplx z) {
  const double lam = c.rate();
  return ((lam - lambda_min) + shift + z) / lam;
}

double tilted_mean(const Density& d, double lambda_min, double shift) {
  double L = 0.0, Lp = 0.0;
  for (const auto& c : d.components()) {
    const double lam = c.rate();
    const double z = ((lam - lambda_min) + shift) / lam;
    const double r = 1.0 / std::sqrt(z);
    L += c.weight * r;
    Lp += c.weight * r / z / (2.0 * lam);
  }
  return Lp / L;
}

Saddle find_saddle(const Density& d, int n, double u) {
  const double target = u / n;
  const double lmin = d.smallest_rate();
  double lo = std::log(lmin) - 50.0;
  double hi = std::log(lmin) + 60.0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (tilted_mean(d, lmin, std::exp(mid)) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double shift = std::exp(0.5 * (lo + hi));
  return Saddle{shift - lmin, shift, lmin};
}

struct SaddleGeometry {
  double log_L = 0.0;  // log L(s*)
  double phi2 = 0.0;   // second derivative of n log L(s) + s u at s*
  double c = 0.0;      // parabola curvature
  double rho = 0.0;    // 2^{1/4} sum w sqrt(lambda) / L(s*)
};

SaddleGeometry geometry(const Density& d, int n, const Saddle& sd) {
  double L = 0.0, L1 = 0.0, L2 = 0.0, B = 0.0;
  double lmax = 0.0;
  for (const auto& c : d.components()) {
    const double lam = c.rate();
    lmax = std::max(lmax, lam);
    const double z = ((lam - sd.lambda_min) + sd.shift) / lam;
    const double r = 1.0 / std::sqrt(z);
    L += c.weight * r;
    L1 -= c.weight * r / z / (2.0 * lam);
    L2 += c.weight * 0.75 * r / (z * z) / (lam * lam);
    B += c.weight * std::sqrt(lam);
  }
  SaddleGeometry g;
  g.log_L = std::log(L);
  g.phi2 = n * (L2 / L - (L1 / L) * (L1 / L));
  g.c = 1.0 / (4.0 * ((lmax - sd.lambda_min) + sd.shift));
  g.rho = std::pow(2.0, 0.25) * B / L;
  return g;
}

// Bound on int_T^inf |F(s(t))/F(s*)| |i - 2ct| dt along the parabola.
double contour_tail(int n, double u, const SaddleGeometry& g, double T) {
  const double cu = g.c * u;
  const double gauss = 0.5 * std::sqrt(kPi / cu) * std::erfc(T * std::sqrt(cu)) +
                       std::exp(-cu * T * T) / u;
  if (n < 5) return gauss;
  const double h = 0.5 * n;
  const double lr = n * std::log(g.rho);
  const double base = lr - cu * T * T;
  const double alg = std::exp(base + (1.0 - h) * std::log(T)) / (h - 1.0) +
                     2.0 * g.c * std::exp(base + (2.0 - h) * std::log(T)) / (h - 2.0);
  return std::min(gauss, alg);
}

ConvPowerValue saddle_inversion(const Density& d, int n, double u,
                                const FourierPlan& plan) {
  const Saddle sd = find_saddle(d, n, u);
  const SaddleGeometry g = geometry(d, n, sd);
  const double w = 1.0 / std::sqrt(g.phi2);
  const cplx L0 = std::exp(cplx(g.log_L, 0.0));
  const auto& comps = d.components();

  // Integrand in the scaled variable tau = t / w.
  auto integrand = [&](double tau) {
    const double t = w * tau;
    const cplx z(-g.c * t * t, t);
    cplx L = 0.0;
    for (const auto& c : comps) {
      L += c.weight / std::sqrt(factor(c, sd.lambda_min, sd.shift, z));
    }
    const cplx e = static_cast<double>(n) * std::log(L / L0) + z * u;
    return w * std::imag(std::exp(e) * cplx(-2.0 * g.c * t, 1.0));
  };

  // Grow the contour until the rigorous tail is far below the target accuracy.
  const double scale = w * std::sqrt(kPi / 2.0);  // rough size of the integral
  double T = 8.0 * w;
  while (contour_tail(n, u, g, T) > 1e-3 * plan.rel_tolerance * scale) {
    T *= 2.0;
    require(T < 1e300, ErrorCode::kTailTolerance,
            "conv_power: contour tail bound does not decay");
  }
  std::vector<double> bp{0.0};
  for (double b = 8.0; b < T / w; b *= 2.0) bp.push_back(b);
  bp.push_back(T / w);
  const auto q = integrate_piecewise(integrand, bp, plan.rel_tolerance, 15);
  const double tail = contour_tail(n, u, g, T);
  require(q.value > 0.0, ErrorCode::kIndeterminate,
          "conv_power: contour integral is not positive");

  ConvPowerValue out;
  const double phi_star = n * g.log_L + sd.s * u;
  out.log_value = phi_star + std::log(q.value) - std::log(kPi);
  out.value = std::exp(out.log_value);
  out.error = out.value * ((q.error + tail) / q.value);
  out.cutoff = T;
  return out;
}

// sum_k w_k sqrt(lambda_k / (2 pi)), so |g(xi)| <= B / sqrt(|xi|).
double envelope_constant(const Density& d) {
  double B = 0.0;
  for (const auto& c : d.components()) {
    B += c.weight * std::sqrt(c.rate() / (2.0 * kPi));
  }
  return B;
}

// Both tails of int |g|^n beyond Xi.
double real_line_tail(const Density& d, int n, double xi) {
  const double h = 0.5 * n;
  return 2.0 * std::exp(n * std::log(envelope_constant(d)) +
                        (1.0 - h) * std::log(xi)) / (h - 1.0);
}

double required_cutoff(const Density& d, int n, double tol) {
  const double h = 0.5 * n;
  const double lb = n * std::log(envelope_constant(d));
  return std::exp((std::log(2.0 / (h - 1.0)) + lb - std::log(tol)) / (h - 1.0));
}

ConvPowerValue real_line_inversion(const Density& d, int n, double u,
                                   const FourierPlan& plan) {
  require(n >= 3, ErrorCode::kUnsupportedOrder,
          "conv_power: the real-line path needs n >= 3");
  const double need = required_cutoff(d, n, plan.tail_tolerance);
  double xi_max = plan.cutoff > 0.0 ? plan.cutoff : need;
  auto fail_cutoff = [&]() {
    std::ostringstream os;
    os.precision(6);
    os << "conv_power: tail tolerance " << plan.tail_tolerance
       << " not reached at cutoff " << xi_max << "; required cutoff " << need;
    fail(ErrorCode::kTailTolerance, os.str());
  };
  if (plan.cutoff > 0.0 && real_line_tail(d, n, xi_max) > plan.tail_tolerance) {
    fail_cutoff();
  }
  const double width = std::min(xi_max / plan.panels, 1.0 / (16.0 * u));
  const double panels = std::ceil(xi_max / width);
  if (panels > 4e6) {
    std::ostringstream os;
    os.precision(6);
    os << "conv_power: required cutoff " << xi_max
       << " exceeds the real-line panel budget";
    fail(ErrorCode::kTailTolerance, os.str());
  }

  auto integrand = [&](double xi) {
    const cplx lg = d.log_laplace(cplx(0.0, 2.0 * kPi * xi));
    return 2.0 * std::real(std::exp(static_cast<double>(n) * lg +
                                    cplx(0.0, 2.0 * kPi * xi * u)));
  };
  auto sum_rule = [&](int order) {
    const auto rule = gauss_legendre_panels(0.0, xi_max,
                                            static_cast<int>(panels), order);
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      terms[i] = rule.weights[i] * integrand(rule.nodes[i]);
    }
    return pairwise_sum(terms);
  };
  const double fine = sum_rule(16);
  const double coarse = sum_rule(8);
  ConvPowerValue out;
  out.value = fine;
  out.error = std::abs(fine - coarse) + real_line_tail(d, n, xi_max);
  out.log_value = fine > 0.0 ? std::log(fine) : -HUGE_VAL;
  out.cutoff = xi_max;
  return out;
}

}  // namespace

int minimum_order(const Density& density) {
  return density.kind() == Density::Kind::kStandardGaussian ? 1 : 5;
}

ConvPowerValue conv_power_eval(const Density& density, int n, double u,
                               const FourierPlan& plan) {
  if (n < minimum_order(density)) {
    fail(ErrorCode::kUnsupportedOrder,
         "conv_power: order " + std::to_string(n) + " below minimum " +
             std::to_string(minimum_order(density)));
  }
  require(u > 0.0 && std::isfinite(u), ErrorCode::kDomain,
          "conv_power: u must be positive");
  require(plan.panels >= 64, ErrorCode::kConfig, "FourierPlan: panels >= 64");
  require(plan.tail_tolerance > 0.0 && plan.rel_tolerance > 0.0,
          ErrorCode::kConfig, "FourierPlan: tolerances must be positive");
  if (plan.path == InversionPath::kRealLine) {
    return real_line_inversion(density, n, u, plan);
  }
  return saddle_inversion(density, n, u, plan);
}

double conv_power(const Density& density, int n, double u,
                  const FourierPlan& plan) {
  return conv_power_eval(density, n, u, plan).value;
}

double log_conv_power(const Density& density, int n, double u,
                      const FourierPlan& plan) {
  const auto v = conv_power_eval(density, n, u, plan);
  require(v.value > v.error || plan.path == InversionPath::kSaddle,
          ErrorCode::kIndeterminate,
          "conv_power: value below its quadrature error");
  return v.log_value;
}

ConvolutionPowerEvaluation conv_power_grid(const Density& density, int n,
                                           std::span<const double> u,
                                           const FourierPlan& plan) {
  ConvolutionPowerEvaluation out;
  out.n = n;
  out.u.assign(u.begin(), u.end());
  out.values.reserve(u.size());
  for (double x : u) {
    const auto v = conv_power_eval(density, n, x, plan);
    out.values.push_back(v.value);
    out.error = std::max(out.error, v.error);
  }
  return out;
}

double saddle_point(const Density& density, int n, double u) {
  require(n >= 1 && u > 0.0, ErrorCode::kDomain, "saddle_point: need n >= 1, u > 0");
  return find_saddle(density, n, u).s;
}

double gaussian_llt(int n, double sigma2, double u) {
  require(n >= 1 && sigma2 > 0.0, ErrorCode::kDomain,
          "gaussian_llt: need n >= 1 and sigma2 > 0");
  const double var = n * sigma2;
  return std::exp(-(u - n) * (u - n) / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
}

double lambda_dev(const Density& density, int N, int j, double u,
                  const FourierPlan& plan) {
  const int n = N - j;
  require(n >= 5, ErrorCode::kUnsupportedOrder, "lambda_dev: need N - j >= 5");
  const double s2 = density.sigma2();
  const double h = u > 0.0 ? conv_power(density, n, u, plan) : 0.0;
  return std::sqrt(n * s2) * h -
         std::exp(-(u - n) * (u - n) / (2.0 * n * s2)) / std::sqrt(2.0 * kPi);
}

DeviationSup measured_eps(const Density& density, int N, int j,
                          const FourierPlan& plan) {
  const int n = N - j;
  require(n >= 5, ErrorCode::kUnsupportedOrder, "measured_eps: need N - j >= 5");
  const double spread = 8.0 * std::sqrt(n * density.sigma2());
  DeviationSup out;
  out.u_low = std::max(n - spread, 1e-6 * n);
  out.u_high = n + spread;
  auto dev = [&](double u) { return std::abs(lambda_dev(density, N, j, u, plan)); };

  constexpr int kPoints = 257;
  double lo = out.u_low, hi = out.u_high;
  for (int pass = 0; pass < 4; ++pass) {
    const double step = (hi - lo) / (kPoints - 1);
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < kPoints; ++i) {
      const double u = lo + i * step;
      const double v = dev(u);
      if (v > best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best_val > out.eps) {
      out.eps = best_val;
      out.argmax = lo + best * step;
    }
    const double centre = lo + best * step;
    lo = std::max(out.u_low, centre - step);
    hi = std::min(out.u_high, centre + step);
  }
  return out;
}

std::complex<double> gamma1(double xi, double sigma2) {
  return std::polar(std::exp(-2.0 * kPi * kPi * xi * xi * sigma2),
                    -2.0 * kPi * xi);
}

namespace {

double envelope(const Density& d, double xi) {
  double e = 0.0;
  for (const auto& c : d.components()) {
    const double y = 2.0 * kPi * xi / c.rate();
    e += c.weight * std::pow(1.0 + y * y, -0.25);
  }
  return e;
}

struct GridMax {
  double value = -HUGE_VAL;
  double at = 0.0;
};

// Log-spaced grid search of f on [a, b] with `per_decade` points per decade,
// followed by three local refinement passes around the maximiser.
template <typename F>
GridMax grid_maximize(F&& f, double a, double b, int per_decade = 4096) {
  const double decades = std::log10(b / a);
  const int count = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  GridMax best;
  const double la = std::log(a), lb = std::log(b);
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = i + 1 == count ? b : std::exp(la + (lb - la) * i / (count - 1));
  }
  xs.front() = a;
  int k = 0;
  for (int i = 0; i < count; ++i) {
    const double v = f(xs[i]);
    if (v > best.value) {
      best.value = v;
      best.at = xs[i];
      k = i;
    }
  }
  double lo = xs[std::max(0, k - 1)];
  double hi = xs[std::min(count - 1, k + 1)];
  for (int pass = 0; pass < 3; ++pass) {
    constexpr int kLocal = 257;
    double at = best.at;
    for (int i = 0; i < kLocal; ++i) {
      const double x = lo + (hi - lo) * i / (kLocal - 1);
      const double v = f(x);
      if (v > best.value) {
        best.value = v;
        best.at = x;
        at = x;
      }
    }
    const double step = (hi - lo) / (kLocal - 1);
    lo = std::max(a, at - step);
    hi = std::min(b, at + step);
  }
  return best;
}

void require_uncollapsed(Delta d, const char* what) {
  require(!d.is_collapsed(), ErrorCode::kDomain,
          std::string(what) + ": requires delta < 1/2");
}

// complex exp(z) - 1 without cancellation for small z.
cplx expm1c(cplx z) {
  const double a = z.real(), b = z.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

}  // namespace

double alpha_outside(Delta d, double c) {
  require_uncollapsed(d, "alpha_outside");
  require(c > 0.0, ErrorCode::kDomain, "alpha_outside: c must be positive");
  const Density dens = Density::kac_mixture(d);
  auto mod = [&](double xi) { return std::abs(dens.char_fn(xi)); };
  const double start = c * d.value();
  // Extend decade by decade until the decreasing envelope drops below the
  // running maximum; beyond that point |g| cannot exceed it.
  GridMax best;
  double a = start;
  for (int decade = 0; decade < 40; ++decade) {
    const double b = a * 10.0;
    const GridMax part = grid_maximize(mod, a, b);
    if (part.value > best.value) best = part;
    if (envelope(dens, b) <= best.value) break;
    a = b;
  }
  const double alpha = 1.0 - best.value;
  require(alpha > 0.0, ErrorCode::kInconsistent,
          "alpha_outside: measured alpha is not positive");
  return alpha;
}

double alpha_annulus(Delta d, double beta, double c) {
  require_uncollapsed(d, "alpha_annulus");
  require(beta > 0.0 && c > 0.0, ErrorCode::kDomain,
          "alpha_annulus: beta and c must be positive");
  const Density dens = Density::kac_mixture(d);
  auto mod = [&](double xi) { return std::abs(dens.char_fn(xi)); };
  const double hi = c * d.value();
  const double lo = hi * std::pow(d.value(), beta);
  const double alpha = 1.0 - grid_maximize(mod, lo, hi).value;
  require(alpha > 0.0, ErrorCode::kInconsistent,
          "alpha_annulus: measured alpha is not positive");
  return alpha;
}

MConstant m_constants(Delta d, double c) {
  require(c > 0.0, ErrorCode::kDomain, "m_constants: c must be positive");
  const Density dens = Density::kac_mixture(d);
  const double s2 = dens.sigma2();
  auto ratio = [&](double xi) {
    const double x = 2.0 * kPi * xi;
    const cplx D = dens.log_laplace(cplx(0.0, x)) + cplx(2.0 * kPi * kPi * xi * xi * s2, x);
    return std::abs(gamma1(xi, s2)) * std::abs(expm1c(D)) / (xi * xi * xi);
  };
  const double hi = c * d.value();
  const GridMax best = grid_maximize(ratio, 1e-3 * hi, hi);
  MConstant out;
  const double kappa3 = dens.moment6() - 3.0 * dens.moment4() + 2.0;
  out.limit_ratio = 4.0 * kPi * kPi * kPi / 3.0 * std::abs(kappa3);
  out.M = std::max(best.value, out.limit_ratio);
  out.xi_at_max = best.value >= out.limit_ratio ? best.at : 0.0;
  out.M_delta2 = out.M * d.value() * d.value();
  return out;
}

double tail_integral(Delta d, int n, double c) {
  require(n >= 5, ErrorCode::kUnsupportedOrder, "tail_integral: need n >= 5");
  require(c > 0.0, ErrorCode::kDomain, "tail_integral: c must be positive");
  const Density dens = Density::kac_mixture(d);
  auto f = [&](double xi) { return std::pow(std::abs(dens.char_fn(xi)), n); };
  double a = c * d.value();
  double total = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double b = 2.0 * a;
    total += integrate(f, a, b, 1e-12).value;
    a = b;
    if (real_line_tail(dens, n, a) < 1e-15 * total) break;
  }
  return 2.0 * total;
}

RegionIntegrals measured_region_integrals(const Density& density, int N,
                                          double c) {
  require(N >= 5, ErrorCode::kUnsupportedOrder,
          "measured_region_integrals: need N >= 5");
  const double s2 = density.sigma2();
  // The common factor e^{-2 pi i N xi} is divided out of both powers.
  auto f = [&](double xi) {
    const double x = 2.0 * kPi * xi;
    const cplx lg = density.log_laplace(cplx(0.0, x)) + cplx(0.0, x);
    const cplx gn = std::exp(static_cast<double>(N) * lg);
    return std::abs(gn - std::exp(-2.0 * kPi * kPi * N * xi * xi * s2));
  };
  const double edge = c * density.delta();
  RegionIntegrals out;
  std::vector<double> bp{0.0};
  for (int k = 40; k >= 1; --k) bp.push_back(edge * std::ldexp(1.0, -k));
  bp.push_back(edge);
  // |.| has kinks where the two powers cross, so depth is capped.
  out.inside = 2.0 * integrate_piecewise(f, bp, 1e-8, 10).value;
  double a = edge, total = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double b = 2.0 * a;
    total += integrate(f, a, b, 1e-8, 10).value;
    a = b;
    const double gauss_tail = std::erfc(kPi * a * std::sqrt(2.0 * N * s2));
    if (real_line_tail(density, N, a) + gauss_tail < 1e-15 * std::max(total, 1e-300)) break;
  }
  out.outside = 2.0 * total;
  return out;
}

}  // namespace kaclab
