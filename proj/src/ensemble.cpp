#include "swl/ensemble.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swl/rng.hpp"

namespace swl {

EnsembleParams::EnsembleParams(int n, int m, double tau_value)
    : n_dim(n), m_dof(m), tau(tau_value) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("EnsembleParams: N must be positive even");
  if (m < n) throw std::invalid_argument("EnsembleParams: M must be at least N");
  if (!(tau_value > -1.0)) throw std::invalid_argument("EnsembleParams: tau must exceed -1");
}

double EnsembleParams::gamma() const { return std::sqrt(gamma_sq()); }

double mp_edge_lower(double gamma) {
  double r = 1.0 - 1.0 / gamma;
  return r * r;
}

double mp_edge_upper(double gamma) {
  double r = 1.0 + 1.0 / gamma;
  return r * r;
}

ScaledCoordinates scaled_coordinates(const EnsembleParams& ens, double z) {
  double g = ens.gamma();
  double m = static_cast<double>(ens.m_dof);
  ScaledCoordinates sc;
  sc.zeta = (z - mp_edge_upper(g)) * g * std::pow(m, 2.0 / 3.0) / std::pow(1.0 + g, 4.0 / 3.0);
  sc.w = std::cbrt(0.25 * ens.n_dim) * (1.0 - ens.tau);
  if (ens.tau * g > 1.0) {
    double gm2 = 1.0 / ens.gamma_sq();
    sc.super_center = (ens.tau + 1.0) * (1.0 + gm2 / ens.tau);
    sc.super_scale =
        (1.0 + ens.tau) * std::sqrt(1.0 - gm2 * gm2 / (ens.tau * ens.tau)) / std::sqrt(0.5 * m);
  } else {
    sc.super_center = std::numeric_limits<double>::quiet_NaN();
    sc.super_scale = std::numeric_limits<double>::quiet_NaN();
  }
  return sc;
}

namespace {

std::vector<double> sample_with_stream(const EnsembleParams& ens, PhiloxStream& rng) {
  const int n = ens.n_dim, m = ens.m_dof;
  Eigen::MatrixXd x(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = rng.next_normal();
  x.row(0) *= std::sqrt(1.0 + ens.tau);

  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, n);
  y.selfadjointView<Eigen::Lower>().rankUpdate(x, 1.0 / m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.compute(y, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");

  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  // a Gram matrix is positive semidefinite: negatives can only be round-off
  double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
  for (double& v : ev) {
    if (v < 0.0) {
      if (v < -1e-12 * scale) throw std::runtime_error("eigenvalue solve returned spurious negative");
      v = 0.0;
    }
  }
  return ev;
}

}  // namespace

std::vector<double> sample_spiked_wishart(const EnsembleParams& ens, std::uint64_t seed) {
  PhiloxStream rng(seed, 0);
  return sample_with_stream(ens, rng);
}

std::vector<double> largest_eigenvalue_samples(const EnsembleParams& ens, int n_samples,
                                               std::uint64_t seed) {
  if (n_samples < 100) throw std::invalid_argument("largest_eigenvalue_samples: need at least 100");
  std::vector<double> out(n_samples);
  for (int s = 0; s < n_samples; ++s) {
    PhiloxStream rng(seed, static_cast<std::uint64_t>(s));
    out[s] = sample_with_stream(ens, rng).back();
  }
  return out;
}

double scale_sample(double lmax, const EnsembleParams& ens, Regime regime) {
  double g = ens.gamma();
  switch (regime) {
    case Regime::edge:
      return (lmax - mp_edge_upper(g)) * g * std::pow(ens.m_dof, 2.0 / 3.0) /
             std::pow(1.0 + g, 4.0 / 3.0);
    case Regime::critical:
      if (ens.n_dim != ens.m_dof)
        throw std::invalid_argument("critical scaling is defined for the square case N = M");
      return (lmax - 4.0) * std::pow(0.25 * ens.n_dim, 2.0 / 3.0);
    case Regime::supercritical: {
      if (!(ens.tau * g > 1.0))
        throw std::invalid_argument("supercritical scaling requires tau > 1/gamma");
      ScaledCoordinates sc = scaled_coordinates(ens, 0.0);
      return (lmax - sc.super_center) / sc.super_scale;
    }
  }
  throw std::invalid_argument("unknown regime");
}

}  // namespace swl
