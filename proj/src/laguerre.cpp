#include "swl/laguerre.hpp"

#include <cmath>
#include <stdexcept>

namespace swl {

LaguerreParams::LaguerreParams(int m, int n) : big_m(m), big_n(n) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("LaguerreParams: N must be positive even");
  if (m <= n) throw std::invalid_argument("LaguerreParams: M must exceed N");
}

namespace {

// L_{k+1} = (x - A_k) L_k - B_k L_{k-1},
// A_k = (2k + M - N + 1)/M, B_k = k(k + M - N)/M^2
template <class S>
S eval_recurrence(int n, S x, const LaguerreParams& p) {
  double M = p.big_m, al = p.alpha();
  if (n == 0) return S(1.0);
  S lm1(1.0);
  S lk = x - (al + 1.0) / M;
  for (int k = 1; k < n; ++k) {
    S ln = (x - (2.0 * k + al + 1.0) / M) * lk - (k * (k + al) / (M * M)) * lm1;
    lm1 = lk;
    lk = ln;
  }
  return lk;
}

template <class S>
void eval_all(int n, S x, const LaguerreParams& p, std::vector<S>& out) {
  double M = p.big_m, al = p.alpha();
  out.resize(n + 1);
  out[0] = S(1.0);
  if (n == 0) return;
  out[1] = x - (al + 1.0) / M;
  for (int k = 1; k < n; ++k)
    out[k + 1] = (x - (2.0 * k + al + 1.0) / M) * out[k] - (k * (k + al) / (M * M)) * out[k - 1];
}

}  // namespace

double laguerre_eval(int n, double x, const LaguerreParams& p) {
  return eval_recurrence<double>(n, x, p);
}

cplx laguerre_eval(int n, cplx x, const LaguerreParams& p) {
  return eval_recurrence<cplx>(n, x, p);
}

void laguerre_eval_all(int n, double x, const LaguerreParams& p, std::vector<double>& out) {
  eval_all<double>(n, x, p, out);
}

void laguerre_eval_all(int n, cplx x, const LaguerreParams& p, std::vector<cplx>& out) {
  eval_all<cplx>(n, x, p, out);
}

void laguerre_eval_all_derivs(int n, double x, const LaguerreParams& p, int nder,
                              std::vector<double>& out) {
  const int cols = n + 1;
  out.assign(static_cast<size_t>(nder + 1) * cols, 0.0);
  const double m = p.big_m;
  const double al = p.alpha();
  for (int d = 0; d <= nder; ++d) out[static_cast<size_t>(d) * cols] = (d == 0) ? 1.0 : 0.0;
  for (int k = 0; k < n; ++k) {
    double a_k = (2.0 * k + al + 1.0) / m;
    double b_k = k * (k + al) / (m * m);
    for (int d = 0; d <= nder; ++d) {
      double* row = &out[static_cast<size_t>(d) * cols];
      double prev = (k > 0) ? row[k - 1] : 0.0;
      double lower = (d > 0) ? out[static_cast<size_t>(d - 1) * cols + k] : 0.0;
      row[k + 1] = (x - a_k) * row[k] + d * lower - b_k * prev;
    }
  }
}

double laguerre_log_norm(int n, const LaguerreParams& p) {
  double al = p.alpha();
  return std::lgamma(n + 1.0) + std::lgamma(n + al + 1.0) -
         (2.0 * n + al + 1.0) * std::log(static_cast<double>(p.big_m));
}

double laguerre_norm(int n, const LaguerreParams& p) { return std::exp(laguerre_log_norm(n, p)); }

cplx poly_eval(const MonicPolynomial& poly, cplx x, const LaguerreParams& p) {
  std::vector<cplx> basis;
  eval_all<cplx>(poly.degree, x, p, basis);
  cplx acc = 0.0;
  for (int k = 0; k <= poly.degree; ++k) acc += poly.coeffs[k] * basis[k];
  return acc;
}

double poly_eval_real(const MonicPolynomial& poly, double x, const LaguerreParams& p) {
  std::vector<double> basis;
  eval_all<double>(poly.degree, x, p, basis);
  double acc = 0.0;
  for (int k = 0; k <= poly.degree; ++k) acc += poly.coeffs[k].real() * basis[k];
  return acc;
}

std::vector<cplx> laguerre_multiply_by_x(const std::vector<cplx>& c, const LaguerreParams& p) {
  double M = p.big_m, al = p.alpha();
  std::vector<cplx> out(c.size() + 1, cplx(0.0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    double kk = static_cast<double>(k);
    out[k + 1] += c[k];
    out[k] += c[k] * ((2.0 * kk + al + 1.0) / M);
    if (k > 0) out[k - 1] += c[k] * (kk * (kk + al) / (M * M));
  }
  return out;
}

std::vector<double> monomial_in_laguerre(int j, const LaguerreParams& p) {
  std::vector<cplx> c{cplx(1.0)};
  for (int i = 0; i < j; ++i) c = laguerre_multiply_by_x(c, p);
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k].real();
  return out;
}

}  // namespace swl
