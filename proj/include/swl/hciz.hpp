#pragma once
#include <vector>

#include "swl/contour.hpp"
#include "swl/laguerre.hpp"

namespace swl {

// Zonal-series evaluation point for the rank-1 orthogonal group integral.
// theta is the generating-function variable; the series
//   prod_i (1 - 2 theta x_i y)^{-1/2} = sum_k theta^k (2k-1)!! Z_k(X) y^k / k!
// converges only inside |2 theta max|x_i| y| < 1, which is checked on use.
struct ZonalSeriesSpec {
  std::vector<double> eigenvalues_x;
  double y = 0.0;
  int k_max = 0;
  double theta = 0.0;
};

// Angular average (1/2pi) int_0^{2pi} exp(c (x1 sin^2 + x2 cos^2)) dtheta,
// the SO(2) (= O(2)) group integral over a rank-1 exponent.  Periodic
// trapezoid, spectrally accurate.
double hciz_direct_so2(double x1, double x2, double c);

// Zonal polynomial of the single-row partition (k) at the identity:
// Z_k(I_N) = (N/2+k-1)! 2^k / ((N/2-1)! (2k-1)!!), evaluated in log space.
double zonal_Zk_IN(int k, int n);

// Z_k(X) for k = 0..k_max from the Taylor coefficients of
// prod_i (1 - 2 theta x_i)^{-1/2}: coefficient c_k gives Z_k = c_k k!/(2k-1)!!.
// Per-factor binomial series are convolved; k_max is capped at 60.
std::vector<double> zonal_coeffs_Zk_X(const std::vector<double>& x, int k_max);

// Partial sum of the rank-1 group integral series at unit scaling,
//   sum_{k<=k_max} Z_k(X) y^k / (k! Z_k(I_N)),  N = x.size().
double zonal_series_hciz(const std::vector<double>& x, double y, int k_max);

// Partial sum of the generating function sum_k c_k (theta y)^k, where c_k are
// the coefficients of prod_i (1 - 2 theta x_i)^{-1/2}.  Converges to
// prod_i (1 - 2 theta x_i y)^{-1/2}; throws outside the convergence radius.
double zonal_genfun_partial(const ZonalSeriesSpec& spec);

// Rank-1 orthogonal group integral by contour quadrature,
//   (N/2-1)!/(2 pi i) * contour int e^t prod_i (t - x_i y)^{-1/2} dt,
// equal to int_{O(N)} exp(tr(X g Y g^T)) dg for Y of rank 1 with eigenvalue y.
// Requires an even number of eigenvalues (single-valued integrand) and a
// contour enclosing every x_i y.
cplx hciz_contour_rank1(const std::vector<double>& x, double y, const ContourPath& contour);

// Unnormalized eigenvalue density of the rank-1 spiked real Wishart ensemble,
//   |Delta(lambda)| prod_j e^{-M lambda_j/2} lambda_j^{(M-N-1)/2}
//     * 1/(2 pi i) contour int e^{M tau t/(2(1+tau))} prod_j (t-lambda_j)^{-1/2} dt.
// The contour must enclose every lambda_j; the result is checked to be real
// to 1e-9 relative before the real part is returned.
double jpdf_contour_eval(const LaguerreParams& params, const std::vector<double>& lambdas,
                         double tau, const ContourPath& contour);

}  // namespace swl
