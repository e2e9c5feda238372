#include "swl/hciz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swl {

namespace {

// Raw Taylor coefficients c_k of prod_i (1 - 2 theta x_i)^{-1/2} in theta.
// Each factor expands with ratio a_{k+1}/a_k = 2 x (k + 1/2)/(k + 1); factors
// are combined by truncated series multiplication.
std::vector<double> genfun_coeffs(const std::vector<double>& x, int k_max) {
  std::vector<double> c(k_max + 1, 0.0);
  c[0] = 1.0;
  std::vector<double> a(k_max + 1), next(k_max + 1);
  for (double xi : x) {
    a[0] = 1.0;
    for (int k = 0; k < k_max; ++k) a[k + 1] = a[k] * 2.0 * xi * (k + 0.5) / (k + 1.0);
    std::fill(next.begin(), next.end(), 0.0);
    for (int k = 0; k <= k_max; ++k) {
      if (c[k] == 0.0) continue;
      for (int j = 0; k + j <= k_max; ++j) next[k + j] += c[k] * a[j];
    }
    c.swap(next);
  }
  return c;
}

void check_kmax(int k_max) {
  if (k_max < 0 || k_max > 60)
    throw std::invalid_argument("zonal series order must lie in [0, 60]");
}

}  // namespace

double hciz_direct_so2(double x1, double x2, double c) {
  const int n = 1024;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * M_PI * k / n;
    double s = std::sin(th), co = std::cos(th);
    acc += std::exp(c * (x1 * s * s + x2 * co * co));
  }
  return acc / n;
}

double zonal_Zk_IN(int k, int n) {
  if (k < 0) throw std::invalid_argument("zonal order must be nonnegative");
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("matrix dimension must be a positive even integer");
  double half = 0.5 * n;
  // log of (N/2+k-1)! 2^k / ((N/2-1)! (2k-1)!!) with (2k-1)!! = (2k)!/(2^k k!).
  double lg = std::lgamma(half + k) + 2.0 * k * std::log(2.0) + std::lgamma(k + 1.0) -
              std::lgamma(half) - std::lgamma(2.0 * k + 1.0);
  return std::exp(lg);
}

std::vector<double> zonal_coeffs_Zk_X(const std::vector<double>& x, int k_max) {
  check_kmax(k_max);
  if (x.empty()) throw std::invalid_argument("eigenvalue list must be nonempty");
  std::vector<double> z = genfun_coeffs(x, k_max);
  // Z_k = c_k * k!/(2k-1)!!, accumulated through the ratio k/(2k-1).
  double fact = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    fact *= k / (2.0 * k - 1.0);
    z[k] *= fact;
  }
  return z;
}

double zonal_series_hciz(const std::vector<double>& x, double y, int k_max) {
  check_kmax(k_max);
  std::vector<double> zk = zonal_coeffs_Zk_X(x, k_max);
  double n = static_cast<double>(x.size());
  // u_k = y^k/(k! Z_k(I_N)) via Z_k(I)/Z_{k-1}(I) = 2(N/2+k-1)/(2k-1).
  double u = 1.0, acc = zk[0];
  for (int k = 1; k <= k_max; ++k) {
    u *= y * (2.0 * k - 1.0) / (k * (n + 2.0 * k - 2.0));
    acc += zk[k] * u;
  }
  return acc;
}

double zonal_genfun_partial(const ZonalSeriesSpec& spec) {
  check_kmax(spec.k_max);
  double xmax = 0.0;
  for (double xi : spec.eigenvalues_x) xmax = std::max(xmax, std::abs(xi));
  if (std::abs(2.0 * spec.theta * xmax * spec.y) >= 1.0)
    throw std::domain_error("zonal generating function evaluated outside its convergence radius");
  std::vector<double> c = genfun_coeffs(spec.eigenvalues_x, spec.k_max);
  double z = spec.theta * spec.y, pw = 1.0, acc = c[0];
  for (int k = 1; k <= spec.k_max; ++k) {
    pw *= z;
    acc += c[k] * pw;
  }
  return acc;
}

cplx hciz_contour_rank1(const std::vector<double>& x, double y, const ContourPath& contour) {
  if (x.empty() || x.size() % 2 != 0)
    throw std::invalid_argument("rank-1 contour formula needs an even, nonzero eigenvalue count");
  for (double xi : x)
    if (winding_number(contour, cplx(xi * y, 0.0)) != 1)
      throw std::invalid_argument("contour must wind once around every x_i * y");
  cplx integral = contour.integrate([&](cplx t) {
    cplx val = std::exp(t);
    for (double xi : x) val *= branch_sqrt_inv(t, cplx(xi * y, 0.0));
    return val;
  });
  integral /= cplx(0.0, 2.0 * M_PI);
  return integral * std::exp(std::lgamma(0.5 * x.size()));
}

double jpdf_contour_eval(const LaguerreParams& params, const std::vector<double>& lambdas,
                         double tau, const ContourPath& contour) {
  const int n = static_cast<int>(lambdas.size());
  if (n != params.big_n)
    throw std::invalid_argument("eigenvalue count must match the ensemble dimension");
  if (n % 2 != 0 || n == 0) throw std::invalid_argument("eigenvalue count must be even and nonzero");
  if (tau == 0.0) throw std::invalid_argument("spike parameter tau must be nonzero");
  for (int i = 0; i < n; ++i) {
    if (!(lambdas[i] > 0.0)) throw std::invalid_argument("eigenvalues must be positive");
    for (int j = i + 1; j < n; ++j)
      if (lambdas[i] == lambdas[j]) throw std::invalid_argument("eigenvalues must be distinct");
  }
  for (double l : lambdas)
    if (winding_number(contour, cplx(l, 0.0)) != 1)
      throw std::invalid_argument("contour must wind once around every eigenvalue");

  const double m = static_cast<double>(params.big_m);
  const double c = m * tau / (2.0 * (1.0 + tau));
  cplx osc = contour.integrate([&](cplx t) {
    cplx val = std::exp(c * t);
    for (double l : lambdas) val *= branch_sqrt_inv(t, cplx(l, 0.0));
    return val;
  });
  osc /= cplx(0.0, 2.0 * M_PI);

  // |Delta| and the one-body weights, accumulated in log space.
  double lg = 0.0;
  for (int i = 0; i < n; ++i) {
    lg += -0.5 * m * lambdas[i] + 0.5 * (m - n - 1.0) * std::log(lambdas[i]);
    for (int j = i + 1; j < n; ++j) lg += std::log(std::abs(lambdas[j] - lambdas[i]));
  }
  cplx value = std::exp(lg) * osc;
  if (std::abs(value.imag()) > 1e-9 * std::abs(value))
    throw std::runtime_error("density contour integral has a non-real residue beyond tolerance");
  return value.real();
}

}  // namespace swl
