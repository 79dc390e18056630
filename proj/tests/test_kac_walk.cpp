#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "kaclab/error.hpp"
#include "kaclab/kac_walk.hpp"

using namespace kaclab;

namespace {

double energy_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("pair rotation") {
  ParticleState s{{1.0, 2.0, 3.0}};
  rotate_pair(s, 0, 2, 0.0);
  CHECK(s.v == std::vector<double>{1.0, 2.0, 3.0});
  rotate_pair(s, 0, 1, 0.5 * kPi);
  CHECK(s.v[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s.v[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.v[2] == 3.0);

  ParticleState t{{3.0, 4.0}};
  rotate_pair(t, 0, 1, std::atan2(4.0, 3.0));
  CHECK(t.v[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(std::abs(t.v[1]) < 1e-15);

  CounterRng rng(31);
  for (int k = 0; k < 10000; ++k) {
    ParticleState p{{rng.normal(), rng.normal(), rng.normal()}};
    const double e = energy_of(p.v);
    const double third = p.v[2];
    rotate_pair(p, 0, 1, 2.0 * kPi * rng.uniform());
    CHECK(energy_of(p.v) == doctest::Approx(e).epsilon(1e-14));
    CHECK(p.v[2] == third);
  }
  try {
    rotate_pair(s, 1, 1, 0.3);
    FAIL("i == j accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  CHECK_THROWS_AS(rotate_pair(s, 0, 3, 0.3), Error);
}

TEST_CASE("pair indexing covers every pair once") {
  for (int N : {2, 3, 8, 17}) {
    std::set<std::pair<int, int>> seen;
    const int pairs = N * (N - 1) / 2;
    for (int k = 0; k < pairs; ++k) {
      const auto p = pair_from_index(N, k);
      CHECK(p.first < p.second);
      CHECK(p.second < N);
      seen.insert(p);
    }
    CHECK(static_cast<int>(seen.size()) == pairs);
  }
}

TEST_CASE("collision pairs are uniform") {
  const int N = 8, pairs = 28, steps = 100000;
  ParticleState s{std::vector<double>(N, 1.0)};
  CounterRng rng(12345);
  std::vector<int> counts(N * N, 0);
  for (int k = 0; k < steps; ++k) {
    const auto r = step(s, rng);
    CHECK(r.i < r.j);
    ++counts[r.i * N + r.j];
  }
  const double expect = static_cast<double>(steps) / pairs;
  double chi2 = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) chi2 += (counts[i * N + j] - expect) * (counts[i * N + j] - expect) / expect;
  }
  // 27 degrees of freedom; 61 is the 0.9999 quantile.
  CHECK(chi2 < 61.0);
  CHECK(s.collisions == static_cast<std::uint64_t>(steps));
  // Exponential clock with rate N.
  CHECK(s.time == doctest::Approx(steps / static_cast<double>(N)).epsilon(0.02));
}

TEST_CASE("energy is conserved") {
  WalkConfig c;
  c.N = 64;
  c.steps = 1000000;
  c.stride = 100000;
  c.observables = {"m2"};
  const auto t = run(c);
  CHECK(t.max_energy_drift <= 1e-9);
  for (const auto& row : t.rows) CHECK(row.values[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("trace layout") {
  WalkConfig c;
  c.steps = 0;
  const auto t0 = run(c);
  CHECK(t0.rows.size() == 1);
  CHECK(t0.rows[0].step == 0);
  CHECK(t0.rows[0].time == 0.0);
  c.steps = 1000;
  c.stride = 10;
  c.observables = {"const", "v1_sq"};
  const auto t = run(c);
  CHECK(t.rows.size() == 101);
  CHECK(t.names == c.observables);
  for (const auto& row : t.rows) CHECK(row.values[0] == 1.0);
  CHECK(t.rows.back().step == 1000);
}

TEST_CASE("uniform initial state is stationary") {
  WalkConfig c;
  c.N = 32;
  c.steps = 320000;
  c.stride = 32;
  c.seed = 8;
  c.observables = {"m4"};
  const auto t = run(c);
  const auto s = summarize_column(t, 0);
  const double expect = 3.0 * 32 / 34.0;  // E v1^4 on the sphere of radius sqrt N
  CHECK(std::abs(s.mean - expect) <= 4.0 * s.standard_error);
  CHECK(s.standard_error > 0.0);
}

TEST_CASE("product initial state relaxes") {
  WalkConfig c;
  c.N = 32;
  c.init = InitialState::kProductDelta;
  c.delta = 0.1;
  c.steps = 32 * 400;
  c.stride = 32;
  c.observables = {"m2", "m4"};
  const auto t = run(c);
  CHECK(t.rows.front().values[0] == doctest::Approx(1.0).epsilon(1e-12));
  const double eq = 3.0 * 32 / 34.0;
  // Late-time m4 sits near equilibrium.
  double late = 0.0;
  const std::size_t n = t.rows.size();
  for (std::size_t i = n - 100; i < n; ++i) late += t.rows[i].values[1];
  CHECK(late / 100.0 == doctest::Approx(eq).epsilon(0.25));
}

TEST_CASE("walk determinism and errors") {
  WalkConfig c;
  c.N = 16;
  c.steps = 5000;
  c.seed = 42;
  const auto a = run(c);
  const auto b = run(c);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].values == b.rows[i].values);
    CHECK(a.rows[i].time == b.rows[i].time);
  }
  c.observables = {"m4", "entropy"};
  try {
    run(c);
    FAIL("unknown observable accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
  CHECK(is_known_observable("max_abs"));
  CHECK_FALSE(is_known_observable("m3"));
  WalkConfig bad;
  bad.stride = 0;
  CHECK_THROWS_AS(run(bad), Error);
}
