#include "kaclab/kac_walk.hpp"

#include <algorithm>
#include <cmath>

#include "kaclab/error.hpp"
#include "kaclab/quadrature.hpp"
#include "kaclab/sphere_marginals.hpp"

namespace kaclab {

void rotate_pair(ParticleState& state, int i, int j, double theta) {
  const int n = static_cast<int>(state.v.size());
  require(i != j, ErrorCode::kDomain, "rotate_pair: invalid collision i == j");
  require(i >= 0 && j >= 0 && i < n && j < n, ErrorCode::kDomain,
          "rotate_pair: index out of range");
  const double c = std::cos(theta), s = std::sin(theta);
  const double a = state.v[i], b = state.v[j];
  state.v[i] = a * c + b * s;
  state.v[j] = -a * s + b * c;
}

std::pair<int, int> pair_from_index(int N, std::uint64_t k) {
  int i = 0;
  std::uint64_t row = static_cast<std::uint64_t>(N - 1);
  while (k >= row) {
    k -= row;
    --row;
    ++i;
  }
  return {i, i + 1 + static_cast<int>(k)};
}

StepRecord step(ParticleState& state, CounterRng& rng) {
  const int N = static_cast<int>(state.v.size());
  require(N >= 2, ErrorCode::kDomain, "step: need N >= 2");
  const std::uint64_t pairs = static_cast<std::uint64_t>(N) * (N - 1) / 2;
  const auto [i, j] = pair_from_index(N, rng.below(pairs));
  const double theta = 2.0 * kPi * rng.uniform();
  rotate_pair(state, i, j, theta);
  state.time += rng.exponential(static_cast<double>(N));
  ++state.collisions;
  return {i, j, theta};
}

bool is_known_observable(const std::string& name) {
  return name == "m2" || name == "m4" || name == "max_abs" || name == "v1_sq" ||
         name == "v1_quartic" || name == "const";
}

double evaluate_observable(const std::string& name, const ParticleState& state) {
  const auto& v = state.v;
  const double n = static_cast<double>(v.size());
  if (name == "m2" || name == "m4") {
    const int p = name == "m2" ? 2 : 4;
    std::vector<double> t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = std::pow(v[i], p);
    return pairwise_sum(t) / n;
  }
  if (name == "max_abs") {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  if (name == "v1_sq") return v[0] * v[0];
  if (name == "v1_quartic") return v[0] * v[0] * v[0] * v[0];
  if (name == "const") return 1.0;
  fail(ErrorCode::kConfig, "unknown observable '" + name + "'");
}

namespace {

double energy(const std::vector<double>& v) {
  std::vector<double> t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i] * v[i];
  return pairwise_sum(t);
}

void project_to_sphere(std::vector<double>& v) {
  const double scale = std::sqrt(static_cast<double>(v.size()) / energy(v));
  for (double& x : v) x *= scale;
}

}  // namespace

ParticleState initial_state(const WalkConfig& config, CounterRng& rng) {
  require(config.N >= 2, ErrorCode::kConfig, "walk: N must be at least 2");
  ParticleState s;
  s.v.resize(config.N);
  if (config.init == InitialState::kUniform) {
    uniform_sphere_sample(rng, std::sqrt(static_cast<double>(config.N)), s.v);
    return s;
  }
  // Independent draws from f_delta, then projection onto the energy sphere.
  const Delta d = Delta::make(config.delta);
  const double hot = std::sqrt(0.5 / d.value());
  const double cold = std::sqrt(0.5 / (1.0 - d.value()));
  for (double& x : s.v) {
    const bool energetic = rng.uniform() < d.value();
    x = (energetic ? hot : cold) * rng.normal();
  }
  project_to_sphere(s.v);
  return s;
}

ObservableTrace run(const WalkConfig& config) {
  require(config.steps >= 0, ErrorCode::kConfig, "walk: steps must be nonnegative");
  require(config.stride >= 1, ErrorCode::kConfig, "walk: stride must be positive");
  for (const auto& name : config.observables) {
    require(is_known_observable(name), ErrorCode::kConfig,
            "walk: unknown observable '" + name + "'");
  }
  CounterRng rng(config.seed);
  ParticleState state = initial_state(config, rng);
  ObservableTrace trace;
  trace.names = config.observables;
  auto record = [&](long k) {
    TraceRow row{state.time, k, {}};
    for (const auto& name : config.observables) {
      row.values.push_back(evaluate_observable(name, state));
    }
    trace.rows.push_back(std::move(row));
  };
  record(0);
  const double N = static_cast<double>(config.N);
  for (long k = 1; k <= config.steps; ++k) {
    step(state, rng);
    if (k % config.N == 0 || k == config.steps) {
      const double drift = std::abs(energy(state.v) - N);
      trace.max_energy_drift = std::max(trace.max_energy_drift, drift / N);
      if (drift > 0.5e-9 * N) {
        project_to_sphere(state.v);
        ++state.rescales;
      }
    }
    if (k % config.stride == 0) record(k);
  }
  trace.rescales = state.rescales;
  return trace;
}

ColumnSummary summarize_column(const ObservableTrace& trace, std::size_t column,
                               std::size_t skip, int batches) {
  require(column < trace.names.size(), ErrorCode::kDomain,
          "summarize_column: column out of range");
  require(trace.rows.size() >= skip + 2 * static_cast<std::size_t>(batches),
          ErrorCode::kInsufficientData, "summarize_column: trace too short");
  const std::size_t n = trace.rows.size() - skip;
  const std::size_t per = n / batches;
  std::vector<double> means(batches);
  for (int b = 0; b < batches; ++b) {
    std::vector<double> t(per);
    for (std::size_t i = 0; i < per; ++i) {
      t[i] = trace.rows[skip + b * per + i].values[column];
    }
    means[b] = pairwise_sum(t) / per;
  }
  ColumnSummary s;
  s.mean = pairwise_sum(means) / batches;
  double ss = 0.0;
  for (double m : means) ss += (m - s.mean) * (m - s.mean);
  s.standard_error = std::sqrt(ss / (batches - 1.0) / batches);
  return s;
}

}  // namespace kaclab
