#pragma once
#include <complex>
#include <vector>

#include "swl/branch.hpp"

namespace swl {

// Parameters of the weight w0(x) = x^{M-N} e^{-Mx}: M degrees of freedom,
// N the (even) matrix dimension.
struct LaguerreParams {
  int big_m = 0;
  int big_n = 0;
  LaguerreParams(int m, int n);
  int alpha() const { return big_m - big_n; }
};

// Polynomial stored by coefficients in the monic Laguerre basis {L_0, ..., L_deg},
// leading coefficient exactly 1 for genuinely monic instances.  Coefficients are
// complex because the skew-orthogonal combinations carry the contour parameter.
struct MonicPolynomial {
  int degree = 0;
  std::vector<cplx> coeffs;

  MonicPolynomial() : coeffs{cplx(1.0)} {}
  explicit MonicPolynomial(std::vector<cplx> c)
      : degree(static_cast<int>(c.size()) - 1), coeffs(std::move(c)) {}
};

// Monic L_n(x) by the forward three-term recurrence.
double laguerre_eval(int n, double x, const LaguerreParams& p);
cplx laguerre_eval(int n, cplx x, const LaguerreParams& p);

// L_0(x) .. L_n(x) in one sweep.
void laguerre_eval_all(int n, double x, const LaguerreParams& p, std::vector<double>& out);
void laguerre_eval_all(int n, cplx x, const LaguerreParams& p, std::vector<cplx>& out);

// L_k^{(d)}(x) for k = 0..n, d = 0..nder, stored as out[d * (n + 1) + k].
// Differentiating the three-term recurrence gives the stable forward sweep
// L_{k+1}^{(d)} = (x - A_k) L_k^{(d)} + d L_k^{(d-1)} - B_k L_{k-1}^{(d)}.
void laguerre_eval_all_derivs(int n, double x, const LaguerreParams& p, int nder,
                              std::vector<double>& out);

// h_{n,0} = n! (n+M-N)! / M^{2n+M-N+1}, evaluated in log space.
double laguerre_log_norm(int n, const LaguerreParams& p);
double laguerre_norm(int n, const LaguerreParams& p);

// Evaluate a Laguerre-basis polynomial.
cplx poly_eval(const MonicPolynomial& poly, cplx x, const LaguerreParams& p);
double poly_eval_real(const MonicPolynomial& poly, double x, const LaguerreParams& p);

// Coefficient-space multiplication by x through the Jacobi relation
// x L_k = L_{k+1} + A_k L_k + B_k L_{k-1}.
std::vector<cplx> laguerre_multiply_by_x(const std::vector<cplx>& c, const LaguerreParams& p);

// x^j expanded in the Laguerre basis.
std::vector<double> monomial_in_laguerre(int j, const LaguerreParams& p);

}  // namespace swl
