#pragma once

// j-particle marginals of F_N d sigma^N through the radial kernel K_j, and
// sampling on the energy sphere.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "kaclab/clt_engine.hpp"
#include "kaclab/log_value.hpp"
#include "kaclab/normalization.hpp"

namespace kaclab {

// K_j(s) with P_j(v_1..v_j) = K_j(sum v_i^2) prod f(v_i), s = sum v_i^2:
//   K_j(s) = |S^{N-j-1}| / (|S^{N-1}| N^{(N-2)/2}) (N - s)^{(N-j-2)/2}
//            Z_{N-j}(sqrt(N - s)) / Z_N(sqrt N).
class MarginalKernel {
 public:
  MarginalKernel(const Density& density, int N, int j, const FourierPlan& plan = {});

  LogValue log_weight(double s) const;
  double weight(double s) const { return log_weight(s).to_double(); }

  // N - s is clamped to at least 1e-8 N.
  double clamped_u(double s) const;

  int N() const noexcept { return N_; }
  int j() const noexcept { return j_; }
  const Density& density() const noexcept { return density_; }
  double log_z_N() const noexcept { return log_z_N_; }

 private:
  Density density_;
  int N_;
  int j_;
  std::shared_ptr<const ConvolutionTable> table_;
  double log_z_N_;
  double log_prefactor_;
};

LogValue marginal_log_weight(int N, int j, double s, const Density& density,
                             const FourierPlan& plan = {});

double marginal_p1(const MarginalKernel& k1, double v);
double marginal_p2(const MarginalKernel& k2, double v1, double v2);

// Half-width beyond which P_1 is negligible: min(sqrt N, sqrt(40 a_max)).
double marginal_cutoff(const Density& density, int N);

// int P_1 dv and int int P_2 dv1 dv2 by quadrature.
double p1_mass(const MarginalKernel& k1);
double p2_mass(const MarginalKernel& k2);
// int v^{2m} P_1(v) dv.
double p1_moment(const MarginalKernel& k1, int m);
// int P_2(v1, v2) dv2 at fixed v1.
double p2_section(const MarginalKernel& k2, double v1);

// N standard normals rescaled to the sphere of the given radius.
std::vector<double> uniform_sphere_sample(int N, double radius, std::uint64_t seed);

class CounterRng;
void uniform_sphere_sample(CounterRng& rng, double radius, std::span<double> out);

struct ImportanceEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  double ess = 0.0;
  long samples = 0;
};

using Observable = std::function<double(std::span<const double>)>;

// Self-normalized importance sampling of E_{F_N}[phi] from the uniform sphere
// measure, with log weights sum log f(v_i). Chains use seeds seed ^ chain and
// are merged in chain order; the standard error is a 64-block jackknife.
ImportanceEstimate importance_expectation(const Observable& observable, int N,
                                          const Density& density, long samples,
                                          std::uint64_t seed, int threads = 0);

inline constexpr int kImportanceChains = 16;

}  // namespace kaclab
