#pragma once
#include <cstdint>
#include <vector>

namespace swl {

// Rank-1 spiked real Wishart ensemble Y = X X^T / M: X is N x M with standard
// normal entries and its first row scaled by sqrt(1+tau), i.e. covariance
// Sigma = diag(1+tau, 1, ..., 1).  gamma^2 = M/N.  The sampler allows M = N
// (square case, gamma = 1); the exact finite-N machinery elsewhere needs M > N.
struct EnsembleParams {
  int n_dim;
  int m_dof;
  double tau;

  EnsembleParams(int n, int m, double tau_value);
  double gamma_sq() const { return static_cast<double>(m_dof) / n_dim; }
  double gamma() const;
};

enum class Regime { edge, critical, supercritical };

// Affine coordinates of the three largest-eigenvalue regimes:
//   zeta          edge coordinate (z - b_plus) * gamma M^{2/3} / (1+gamma)^{4/3}
//   w             critical spike coordinate (N/4)^{1/3} (1 - tau), gamma = 1
//   super_center  (tau+1)(1 + gamma^{-2} tau^{-1})
//   super_scale   (1+tau) sqrt(1 - gamma^{-2} tau^{-2}) / sqrt(M/2)
// super fields are NaN when tau <= gamma^{-1} (outside their validity regime).
struct ScaledCoordinates {
  double zeta;
  double w;
  double super_center;
  double super_scale;
};

ScaledCoordinates scaled_coordinates(const EnsembleParams& ens, double z);

// Marchenko-Pastur support edges (1 -+ gamma^{-1})^2.
double mp_edge_lower(double gamma);
double mp_edge_upper(double gamma);

// One draw of the spiked Wishart spectrum, ascending.  Deterministic in seed;
// equals the first entry of the stream used by largest_eigenvalue_samples.
std::vector<double> sample_spiked_wishart(const EnsembleParams& ens, std::uint64_t seed);

// n_samples independent draws of the largest eigenvalue, one counter-RNG
// sub-stream per sample index so the set is independent of evaluation order.
std::vector<double> largest_eigenvalue_samples(const EnsembleParams& ens, int n_samples,
                                               std::uint64_t seed);

// The regime-appropriate affine rescaling of a largest-eigenvalue sample.
// critical requires N = M (the square-case coordinate); supercritical requires
// tau > gamma^{-1}.
double scale_sample(double lmax, const EnsembleParams& ens, Regime regime);

}  // namespace swl
