#include <cmath>
#include <functional>
#include <string>

#include "doctest.h"
#include "kaclab/bounds.hpp"
#include "kaclab/clt_engine.hpp"
#include "kaclab/error.hpp"
#include "kaclab/quadrature.hpp"
#include "oracles.hpp"

using namespace kaclab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

// Bulk grid n +- 6 sqrt(2n), clipped to positive u.
std::vector<double> bulk(int n, double sigma2, int points = 41) {
  const double w = 6.0 * std::sqrt(n * sigma2);
  const double lo = std::max(n - w, 0.05 * n), hi = n + w;
  std::vector<double> u;
  for (int i = 0; i < points; ++i) u.push_back(lo + (hi - lo) * i / (points - 1));
  return u;
}

}  // namespace

TEST_CASE("chi-square oracle on both inversion paths") {
  const Density g = Density::standard_gaussian();
  const Density half = Density::kac_mixture(Delta::make(0.5));
  FourierPlan real_line;
  real_line.path = InversionPath::kRealLine;
  for (int n : {5, 8, 16, 64, 128}) {
    for (double u : bulk(n, 2.0)) {
      const double expect = std::exp(oracle::chi2_log_pdf(n, u));
      CHECK(conv_power(g, n, u) == doctest::Approx(expect).epsilon(1e-8));
      CHECK(conv_power(half, n, u) == doctest::Approx(expect).epsilon(1e-8));
      CHECK(log_conv_power(g, n, u) == doctest::Approx(std::log(expect)).epsilon(1e-9));
    }
    // The real-line tail of |g|^n decays like xi^{-n/2}, so low orders cannot reach 1e-14.
    if (n < 16) continue;
    for (double u : bulk(n, 2.0, 9)) {
      const double expect = std::exp(oracle::chi2_log_pdf(n, u));
      CHECK(conv_power(g, n, u, real_line) == doctest::Approx(expect).epsilon(1e-8));
    }
  }
  CHECK(conv_power(g, 4, 4.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  CHECK(conv_power(g, 16, 16.0) ==
        doctest::Approx(std::exp(oracle::chi2_log_pdf(16, 16))).epsilon(1e-10));
  CHECK(conv_power(g, 16, 16.0) == doctest::Approx(0.0697933).epsilon(1e-6));
  CHECK(conv_power(half, 8, 8.0) == doctest::Approx(0.0976834).epsilon(1e-6));
  CHECK(conv_power(half, 8, 8.0) ==
        doctest::Approx(std::exp(oracle::chi2_log_pdf(8, 8))).epsilon(1e-10));
}

TEST_CASE("mixture convolution against the Kummer series") {
  for (double d : {0.1, 0.0625, 0.3}) {
    const Density D = Density::kac_mixture(Delta::make(d));
    for (int n : {5, 8, 16, 32}) {
      for (double u : bulk(n, D.sigma2(), 21)) {
        const double expect = oracle::mixture_conv_log_pdf(d, n, u);
        CHECK(log_conv_power(D, n, u) == doctest::Approx(expect).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("saddle and real-line paths agree on the mixture") {
  const Density D = Density::kac_mixture(Delta::make(0.05));
  FourierPlan real_line;
  real_line.path = InversionPath::kRealLine;
  for (int n : {16, 24, 60}) {
    for (double u : bulk(n, D.sigma2(), 7)) {
      const auto a = conv_power_eval(D, n, u);
      const auto b = conv_power_eval(D, n, u, real_line);
      // Real-line errors are absolute, so deep-tail points are compared within both budgets.
      CHECK(std::abs(a.value - b.value) <= a.error + b.error + 1e-9 * a.value);
      CHECK(a.error >= 0.0);
    }
  }
}

TEST_CASE("conv_power errors") {
  const Density D = Density::kac_mixture(Delta::make(0.1));
  CHECK(minimum_order(D) == 5);
  CHECK(minimum_order(Density::standard_gaussian()) == 1);
  CHECK(code_of([&] { conv_power(D, 4, 4.0); }) == ErrorCode::kUnsupportedOrder);
  CHECK(code_of([&] { conv_power(D, 8, 0.0); }) == ErrorCode::kDomain);
  CHECK(code_of([&] { conv_power(D, 8, -1.0); }) == ErrorCode::kDomain);
  FourierPlan tight;
  tight.path = InversionPath::kRealLine;
  tight.cutoff = 0.5;
  try {
    conv_power(D, 8, 8.0, tight);
    FAIL("short cutoff accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTailTolerance);
    CHECK(std::string(e.what()).find("required cutoff") != std::string::npos);
  }
}

TEST_CASE("conv_power_grid") {
  const Density D = Density::kac_mixture(Delta::make(0.2));
  const int n = 12;
  std::vector<double> u;
  for (int i = 1; i <= 400; ++i) u.push_back(0.25 * i);
  const auto e = conv_power_grid(D, n, u);
  REQUIRE(e.values.size() == u.size());
  for (double v : e.values) CHECK(v >= -e.error);
  double mass = 0.0;  // trapezoid over the bulk
  for (std::size_t i = 0; i + 1 < u.size(); ++i) mass += 0.125 * (e.values[i] + e.values[i + 1]);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("gaussian comparator") {
  CHECK(gaussian_llt(100, 2.0, 100.0) ==
        doctest::Approx(1.0 / (10.0 * std::sqrt(2.0) * std::sqrt(2.0 * kPi))).epsilon(1e-14));
  CHECK(gaussian_llt(100, 2.0, 100.0) == doctest::Approx(0.0282095).epsilon(1e-6));
  for (double u : {80.0, 99.0, 101.0, 130.0}) {
    CHECK(gaussian_llt(100, 2.0, u) < gaussian_llt(100, 2.0, 100.0));
  }
  const auto q = integrate([](double u) { return gaussian_llt(100, 2.0, u); }, 0.0, 300.0, 1e-13);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("local CLT deviation for the Gaussian") {
  const Density g = Density::standard_gaussian();
  // Oracle: lambda at the reported argmax, and a dense scan bounded by the sup.
  const auto s = measured_eps(g, 64, 0);
  const double sc = std::sqrt(64 * 2.0);
  auto lambda = [&](double u) {
    return sc * std::exp(oracle::chi2_log_pdf(64, u)) -
           std::exp(-(u - 64) * (u - 64) / (2 * 64 * 2.0)) / std::sqrt(2 * kPi);
  };
  CHECK(s.eps == doctest::Approx(std::abs(lambda(s.argmax))).epsilon(1e-8));
  for (double u = s.u_low; u <= s.u_high; u += (s.u_high - s.u_low) / 5000) {
    CHECK(std::abs(lambda(u)) <= s.eps + 1e-9);
  }
  // Classical N^{-1/2} rate.
  const double e16 = measured_eps(g, 16, 0).eps;
  const double e64 = measured_eps(g, 64, 0).eps;
  const double e256 = measured_eps(g, 256, 0).eps;
  CHECK(e16 > e64);
  CHECK(e64 > e256);
  CHECK(e16 / e64 == doctest::Approx(2.0).epsilon(0.15));
  CHECK(e64 / e256 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("lambda deviation in the far tail") {
  const Density D = Density::kac_mixture(Delta::make(0.1));
  const int N = 40;
  const double eps0 = measured_eps(D, N, 0).eps;
  CHECK(std::abs(lambda_dev(D, N, 0, 4.0 * N)) <= eps0 + 1e-14);
}

TEST_CASE("alpha constants against their leading terms") {
  const double lead = 1.0 - std::pow(0.8, 0.25);
  CHECK(lead == doctest::Approx(0.0542582).epsilon(1e-6));
  for (double d : {0.1, 0.05, 0.01}) {
    const double a = alpha_outside(Delta::make(d));
    CHECK(a > 0.0);
    CHECK(a >= 0.9 * d * lead);
    // The sup is attained: no grid point beyond c delta exceeds 1 - alpha.
    const Density D = Density::kac_mixture(Delta::make(d));
    for (double xi = kDefaultC * d; xi < 100.0; xi *= 1.01) {
      CHECK(std::abs(D.char_fn(xi)) <= 1.0 - a + 1e-12);
    }
  }
  for (double d : {0.1, 0.05}) {
    const double ab = alpha_annulus(Delta::make(d), 0.1);
    CHECK(ab > 0.0);
    CHECK(ab >= 0.5 * std::pow(d, 1.2) / 16.0);
  }
  CHECK(code_of([] { alpha_outside(Delta::make(0.5)); }) == ErrorCode::kDomain);
}

TEST_CASE("M constant") {
  const auto half = m_constants(Delta::make(0.5));
  CHECK(std::isfinite(half.M));
  double lo = INFINITY, hi = 0.0;
  for (double d : {0.1, 0.05, 0.025}) {
    const auto m = m_constants(Delta::make(d));
    CHECK(m.M >= m.limit_ratio * (1.0 - 1e-12));
    CHECK(m.M_delta2 == doctest::Approx(m.M * d * d).epsilon(1e-14));
    lo = std::min(lo, m.M_delta2);
    hi = std::max(hi, m.M_delta2);
    // Limit from the third cumulant of V^2.
    const Density D = Density::kac_mixture(Delta::make(d));
    const double k3 = D.moment6() - 3.0 * D.moment4() + 2.0;
    CHECK(m.limit_ratio == doctest::Approx(4.0 * kPi * kPi * kPi / 3.0 * std::abs(k3)).epsilon(1e-12));
    // The ratio near zero approaches the limit.
    const double xi = 1e-2 * kDefaultC * d;
    const double r = std::abs(D.char_fn(xi) - gamma1(xi, D.sigma2())) / (xi * xi * xi);
    CHECK(r == doctest::Approx(m.limit_ratio).epsilon(0.05));
  }
  CHECK(hi / lo < 4.0);
}

TEST_CASE("tail integral") {
  const Delta d = Delta::make(0.1);
  const double a = alpha_outside(d);
  const double t50 = tail_integral(d, 50);
  CHECK(t50 <= 2.0 * std::pow(1.0 - a, 50) / kPi + 2.0 / (kPi * 47.0));
  const double t100 = tail_integral(d, 100);
  CHECK(t100 <= 0.5 * t50);
  // Collapsed case against the closed-form substitution.
  const Delta h = Delta::make(0.5);
  CHECK(tail_integral(h, 20) ==
        doctest::Approx(oracle::collapsed_tail(20, kDefaultC * 0.5)).epsilon(1e-6));
}

TEST_CASE("certificates dominate the measured region integrals") {
  for (auto [N, dv] : {std::pair{100, 0.1}, {64, 0.05}, {32, 0.0625}}) {
    const Delta d = Delta::make(dv);
    const Density D = Density::kac_mixture(d);
    const double s2 = D.sigma2();
    const auto mc = m_constants(d);
    const auto o = bound_outside(N, d, kDefaultC, s2, alpha_outside(d), tail_integral(d, N));
    const auto in = bound_inside(N, d, kDefaultC, 0.1, s2, alpha_annulus(d, 0.1), mc.M_delta2,
                                 0.0, 0.0);
    const auto r = measured_region_integrals(D, N);
    CHECK(o.value > 0.0);
    CHECK(std::isfinite(o.value));
    CHECK(in.value > 0.0);
    CHECK(r.outside <= o.value);
    CHECK(r.inside <= in.value);
    // Inversion bound: the sup deviation is at most sqrt(N) Sigma times the L1 norm.
    CHECK(measured_eps(D, N, 0).eps <= std::sqrt(N * s2) * (r.inside + r.outside) + 1e-9);
  }
}

TEST_CASE("gamma1") {
  CHECK(gamma1(0.0, 3.0) == std::complex<double>(1.0, 0.0));
  const auto v = gamma1(0.3, 2.0);
  CHECK(std::abs(v) == doctest::Approx(std::exp(-2.0 * kPi * kPi * 0.09 * 2.0)).epsilon(1e-14));
  CHECK(std::arg(v) == doctest::Approx(-2.0 * kPi * 0.3).epsilon(1e-12));
}
