#include <cmath>
#include <vector>

#include "doctest.h"
#include "kaclab/error.hpp"
#include "kaclab/functionals.hpp"

using namespace kaclab;

TEST_CASE("equilibrium states have no entropy and no production") {
  for (const Density& D : {Density::standard_gaussian(), Density::kac_mixture(Delta::make(0.5))}) {
    for (int N : {8, 32}) {
      CHECK(std::abs(entropy(D, N).H) <= 1e-6);
      CHECK(std::abs(production_numerator(D, N).value) <= 1e-6);
    }
  }
  try {
    gamma_ratio(Density::kac_mixture(Delta::make(0.5)), 16);
    FAIL("gamma at delta = 1/2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUndefined);
  }
}

TEST_CASE("entropy of the chaotic state") {
  const Density D = Density::kac_mixture(Delta::make(0.1));
  const auto e16 = entropy(D, 16);
  const auto e64 = entropy(D, 64);
  CHECK(e16.H > 0.0);
  CHECK(e64.H > e16.H);
  CHECK(e16.per_particle == doctest::Approx(e16.H / 16).epsilon(1e-14));
  CHECK(e16.limit_gap == doctest::Approx(std::abs(e16.per_particle - kHalfLog2)).epsilon(1e-14));
  CHECK_THROWS_AS(entropy(D, 5), Error);
}

TEST_CASE("production ratio respects the spectral gap") {
  const Density D = Density::kac_mixture(Delta::make(0.1));
  const int N = 16;
  const auto r = gamma_ratio(D, N);
  CHECK(r.ratio_lower_bound == doctest::Approx(2.0 / 15.0).epsilon(1e-15));
  CHECK(r.numerator > 0.0);
  CHECK(r.ratio >= r.ratio_lower_bound);
  CHECK(r.ratio == doctest::Approx(r.numerator / r.entropy).epsilon(1e-14));
  CHECK(r.numerator_per_particle == doctest::Approx(r.numerator / N).epsilon(1e-14));
}

TEST_CASE("numerator refinement and grid validation") {
  const Density D = Density::kac_mixture(Delta::make(0.1));
  const auto a = production_numerator(D, 16);
  NumeratorGrid fine;
  fine.theta = fine.phi = 512;
  fine.radial = 256;
  const auto b = production_numerator(D, 16, {}, fine);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-8));
  NumeratorGrid bad;
  bad.phi = 128;
  try {
    production_numerator(D, 16, {}, bad);
    FAIL("mismatched grid accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
  CHECK_THROWS_AS(production_numerator(D, 6), Error);
}

TEST_CASE("Monte Carlo numerator agrees with quadrature") {
  const Density D = Density::kac_mixture(Delta::make(0.1));
  const double quad = production_numerator(D, 16).value;
  const auto mc = mc_numerator(D, 16, 200000, 17);
  CHECK(mc.standard_error > 0.0);
  CHECK(std::abs(mc.estimate - quad) <= 3.0 * mc.standard_error);
}

TEST_CASE("numerator bound arithmetic") {
  // delta = 0.1, no deviation terms, N large: 4 * bracket * (0.1 log 10).
  const double L = std::log(0.1);
  const double bracket = 1.5 - std::log(kPi) / (2 * L) - 1 / (2 * L) - 0.1 / (2 * L);
  const double limit = 4.0 * bracket * (-0.1 * L);
  CHECK(limit == doctest::Approx(1.8305).epsilon(1e-4));
  CHECK(paper_numerator_bound(100000000, Delta::make(0.1), 0.0, 0.0) ==
        doctest::Approx(limit).epsilon(1e-7));
  CHECK(paper_numerator_bound(10, Delta::make(0.1), 0.0, 0.0) ==
        doctest::Approx(limit / std::sqrt(0.8)).epsilon(1e-14));
  // delta = 1/e makes the logarithms unity.
  const double e1 = std::exp(-1.0);
  const double at_e = 4.0 * e1 * (1.5 + 0.5 * std::log(kPi) + 0.5 + 0.5 * e1);
  CHECK(paper_numerator_bound(100000000, Delta::make(e1), 0.0, 0.0) ==
        doctest::Approx(at_e).epsilon(1e-7));
  // Deviation terms enter as (1 + sqrt(2 pi) eps2) / (1 + sqrt(2 pi) lambda0).
  const double r2pi = std::sqrt(2.0 * kPi);
  CHECK(paper_numerator_bound(50, Delta::make(0.1), 0.2, 0.1) ==
        doctest::Approx(paper_numerator_bound(50, Delta::make(0.1), 0.0, 0.0) * (1 + 0.2 * r2pi) /
                        (1 + 0.1 * r2pi)).epsilon(1e-14));
  try {
    paper_numerator_bound(50, Delta::make(0.1), 0.0, -1.0);
    FAIL("nonpositive denominator accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCertificateUnavailable);
  }
  const Density D = Density::kac_mixture(Delta::make(0.1));
  CHECK(lambda0(D, 40) == doctest::Approx(std::sqrt(40 * D.sigma2()) * conv_power(D, 40, 40.0) -
                                          1 / r2pi).epsilon(1e-14));
}

TEST_CASE("scaling check") {
  const double beta = 0.1;
  std::vector<ScalingPoint> exact, perturbed;
  for (int N : {32, 64, 128, 256, 512, 1024}) {
    const double base = std::log(N) / std::pow(N, 1.0 - 2.0 * beta);
    exact.push_back({N, base});
    perturbed.push_back({N, base * (1.0 + 0.1 / N)});
  }
  const auto fit = villani_scaling_check(exact, beta);
  CHECK(fit.slope == doctest::Approx(-0.8).epsilon(1e-12));
  CHECK(fit.spread == doctest::Approx(1.0).epsilon(1e-12));
  for (double x : fit.normalized) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
  const auto p = villani_scaling_check(perturbed, beta);
  CHECK(std::abs(p.slope + 0.8) < 0.01);
  CHECK(p.spread < 1.01);
  exact.pop_back();
  exact.pop_back();
  try {
    villani_scaling_check(exact, beta);
    FAIL("four points accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInsufficientData);
  }
}
