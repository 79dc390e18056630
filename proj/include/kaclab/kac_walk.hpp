#pragma once

// Particle simulation of the Kac master equation: random pair rotations on
// the energy sphere sum v_i^2 = N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kaclab/densities.hpp"
#include "kaclab/rng.hpp"

namespace kaclab {

struct ParticleState {
  std::vector<double> v;
  std::uint64_t collisions = 0;
  double time = 0.0;
  int rescales = 0;  // energy re-projections performed so far
};

// v_i <- v_i cos t + v_j sin t, v_j <- -v_i sin t + v_j cos t.
void rotate_pair(ParticleState& state, int i, int j, double theta);

// Maps k in [0, N(N-1)/2) to the k-th unordered pair (i < j) in row order.
std::pair<int, int> pair_from_index(int N, std::uint64_t k);

struct StepRecord {
  int i;
  int j;
  double theta;
};

// One collision: uniform pair, uniform angle, exponential clock of rate N.
StepRecord step(ParticleState& state, CounterRng& rng);

enum class InitialState { kUniform, kProductDelta };

struct WalkConfig {
  int N = 32;
  InitialState init = InitialState::kUniform;
  double delta = 0.1;  // used by kProductDelta
  long steps = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> observables{"m4", "max_abs", "v1_sq", "v1_quartic"};
  long stride = 1;
};

// Known names: m2, m4, max_abs, v1_sq, v1_quartic, const.
bool is_known_observable(const std::string& name);
double evaluate_observable(const std::string& name, const ParticleState& state);

struct TraceRow {
  double time;
  long step;
  std::vector<double> values;
};

struct ObservableTrace {
  std::vector<std::string> names;
  std::vector<TraceRow> rows;
  double max_energy_drift = 0.0;  // largest |sum v^2 - N| / N seen at checks
  int rescales = 0;
};

ParticleState initial_state(const WalkConfig& config, CounterRng& rng);
ObservableTrace run(const WalkConfig& config);

// Mean of each observable column and its batch-means standard error.
struct ColumnSummary {
  double mean = 0.0;
  double standard_error = 0.0;
};
ColumnSummary summarize_column(const ObservableTrace& trace, std::size_t column,
                               std::size_t skip = 0, int batches = 32);

}  // namespace kaclab
