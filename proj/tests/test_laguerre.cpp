#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "swl/laguerre.hpp"
#include "swl/quad.hpp"

using swl::cplx;
using swl::LaguerreParams;

namespace {

double w0(double x, const LaguerreParams& p) {
  return std::pow(x, p.alpha()) * std::exp(-double(p.big_m) * x);
}

// quadrature of the h-normalized product; equals delta_{nm} up to tolerance
double normalized_overlap(int n, int m, const LaguerreParams& p) {
  auto grid = swl::semi_infinite_grid(20, 0.0, 4.0 / p.big_m);
  double lognorm = 0.5 * (swl::laguerre_log_norm(n, p) + swl::laguerre_log_norm(m, p));
  return grid.integrate([&](double x) {
    return swl::laguerre_eval(n, x, p) * swl::laguerre_eval(m, x, p) * w0(x, p) *
           std::exp(-lognorm);
  });
}

}  // namespace

TEST_CASE("laguerre_low_order_values") {
  LaguerreParams p(8, 6);
  CHECK(swl::laguerre_eval(0, 3.7, p) == 1.0);
  // L_1(x) = x - (M-N+1)/M
  CHECK(swl::laguerre_eval(1, 3.0, p) == doctest::Approx(2.625).epsilon(1e-15));
}

TEST_CASE("laguerre_norm_values") {
  LaguerreParams p(8, 6);
  // h_{n,0} = n! (n+M-N)! / M^{2n+M-N+1}
  CHECK(swl::laguerre_norm(0, p) == doctest::Approx(2.0 / 512.0).epsilon(1e-13));
  CHECK(swl::laguerre_norm(1, p) == doctest::Approx(6.0 / 32768.0).epsilon(1e-13));
  // squared norm from quadrature, h-normalized
  for (int n : {0, 1, 4, 10}) {
    CHECK(std::abs(normalized_overlap(n, n, p) - 1.0) < 1e-10);
  }
}

TEST_CASE("laguerre_orthogonality_by_quadrature") {
  for (int m_big : {8, 16, 24}) {
    LaguerreParams p(m_big, 6);
    for (int n = 0; n <= 12; ++n)
      for (int m = n + 1; m <= 12; m += (n % 2) + 1) {
        CHECK(std::abs(normalized_overlap(n, m, p)) < 1e-10);
      }
  }
}

TEST_CASE("laguerre_recurrence_matches_monomial_expansion") {
  // x^j rebuilt in the Laguerre basis and re-evaluated must reproduce x^j
  LaguerreParams p(10, 4);
  for (int j = 0; j <= 10; ++j) {
    auto c = swl::monomial_in_laguerre(j, p);
    for (double x = 0.0; x <= 8.0; x += 0.61) {
      double acc = 0.0;
      std::vector<double> basis;
      swl::laguerre_eval_all(j, x, p, basis);
      for (int k = 0; k <= j; ++k) acc += c[k] * basis[k];
      double want = std::pow(x, j);
      CHECK(std::abs(acc - want) < 1e-11 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("laguerre_rodrigues_consistency") {
  // symbolic n-th derivative of e^{-Mx} x^{n+alpha} via the Leibniz rule gives
  // monomial coefficients (-1)^k C(n,k) (n+alpha)_k^{falling} M^{-k} for x^{n-k}
  LaguerreParams p(8, 6);
  double M = p.big_m, al = p.alpha();
  for (int n = 0; n <= 4; ++n) {
    for (double x : {0.3, 1.0, 2.5, 6.0}) {
      double acc = 0.0;
      double binom = 1.0, falling = 1.0, msign = 1.0;
      for (int k = 0; k <= n; ++k) {
        acc += binom * falling * msign * std::pow(x, n - k);
        binom *= double(n - k) / double(k + 1);
        falling *= (n + al - k);
        msign *= -1.0 / M;
      }
      CHECK(swl::laguerre_eval(n, x, p) == doctest::Approx(acc).epsilon(1e-12));
    }
  }
}

TEST_CASE("laguerre_complex_argument_consistency") {
  LaguerreParams p(12, 8);
  cplx z(1.5, -2.0);
  std::vector<cplx> all;
  swl::laguerre_eval_all(7, z, p, all);
  for (int n = 0; n <= 7; ++n) {
    CHECK(std::abs(all[n] - swl::laguerre_eval(n, z, p)) < 1e-13 * std::abs(all[n]));
  }
  // real axis agrees with the real path
  CHECK(swl::laguerre_eval(5, cplx(2.0, 0.0), p).real() ==
        doctest::Approx(swl::laguerre_eval(5, 2.0, p)).epsilon(1e-15));
}

TEST_CASE("poly_eval_laguerre_basis") {
  LaguerreParams p(8, 6);
  // pi = L_3 + (2-i) L_1 evaluated against explicit recurrence values
  swl::MonicPolynomial poly(std::vector<cplx>{0.0, cplx(2.0, -1.0), 0.0, 1.0});
  cplx z(0.7, 0.4);
  cplx want = swl::laguerre_eval(3, z, p) + cplx(2.0, -1.0) * swl::laguerre_eval(1, z, p);
  CHECK(std::abs(swl::poly_eval(poly, z, p) - want) < 1e-14 * std::abs(want));
  CHECK(poly.degree == 3);
}

TEST_CASE("laguerre_derivative_table") {
  LaguerreParams p(12, 8);
  std::vector<double> tab;
  for (double x : {0.0, 0.3, 1.7, 4.2}) {
    swl::laguerre_eval_all_derivs(9, x, p, 4, tab);
    // row 0 is the plain evaluation
    std::vector<double> vals;
    swl::laguerre_eval_all(9, x, p, vals);
    for (int k = 0; k <= 9; ++k) CHECK(tab[k] == doctest::Approx(vals[k]).epsilon(1e-14));
    // second-order ODE x L'' + (alpha+1 - Mx) L' + M n L = 0
    for (int n = 1; n <= 9; ++n) {
      double l = tab[n], lp = tab[10 + n], lpp = tab[20 + n];
      double resid = x * lpp + (p.alpha() + 1.0 - p.big_m * x) * lp + p.big_m * n * l;
      double scale = std::abs(x * lpp) + std::abs((p.alpha() + 1.0 - p.big_m * x) * lp) +
                     std::abs(p.big_m * n * l);
      CHECK(std::abs(resid) < 1e-12 * std::max(1.0, scale));
    }
  }
  // third and fourth derivatives against central differences of lower rows
  double x0 = 2.1, h = 1e-4;
  std::vector<double> tp, tm, t0;
  swl::laguerre_eval_all_derivs(9, x0 + h, p, 3, tp);
  swl::laguerre_eval_all_derivs(9, x0 - h, p, 3, tm);
  swl::laguerre_eval_all_derivs(9, x0, p, 4, t0);
  for (int n = 6; n <= 9; ++n) {
    double fd3 = (tp[20 + n] - tm[20 + n]) / (2 * h);
    double fd4 = (tp[30 + n] - tm[30 + n]) / (2 * h);
    CHECK(fd3 == doctest::Approx(t0[30 + n]).epsilon(1e-5));
    CHECK(fd4 == doctest::Approx(t0[40 + n]).epsilon(1e-5));
  }
}
