#include "swl/skew.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swl {

// truncation point: past the last Laguerre zero of degree D the integrands
// decay like x^{D + alpha/2} e^{-Mx/2}; walk L out until the log-density has
// dropped 50 below its peak
double truncation_point(const LaguerreParams& p, int max_degree) {
  double M = p.big_m, al = p.alpha();
  double d = std::max(max_degree, 1) + 0.5 * al + 2.0;
  double edge = (std::sqrt(d) + std::sqrt(d + al)) * (std::sqrt(d) + std::sqrt(d + al)) / M;
  auto logdens = [&](double x) { return d * std::log(x) - 0.5 * M * x; };
  double peak = 2.0 * d / M;
  double L = std::max({edge * 1.2, peak * 1.2, 8.0 / M});
  while (logdens(L) > logdens(peak) - 50.0) L *= 1.2;
  return L;
}

int SkewWeightContext::panel_of(double x) const {
  auto it = std::upper_bound(grid.panel_edges.begin(), grid.panel_edges.end(), x);
  int p = static_cast<int>(it - grid.panel_edges.begin()) - 1;
  int np = static_cast<int>(grid.panel_edges.size()) - 2;
  return std::clamp(p, 0, np);
}

cplx weight_w(const SkewWeightContext& ctx, double x) {
  double M = ctx.params.big_m;
  double half_pow = 0.5 * (ctx.params.alpha() - 1);
  return std::exp(-0.5 * M * x) * std::pow(x, half_pow) * branch_sqrt_inv(ctx.t, x);
}

SkewWeightContext make_skew_context(const LaguerreParams& params, cplx t, int max_degree,
                                    std::optional<double> z_truncation, int points_per_panel) {
  double L = z_truncation ? *z_truncation : truncation_point(params, max_degree);
  SkewWeightContext ctx{params,
                        t,
                        refined_grid(points_per_panel, 0.0, L,
                                     std::max(8, static_cast<int>(L * params.big_m / 2))),
                        z_truncation,
                        max_degree,
                        {}, {}, {}, {}, {}, {}, {}, {}};
  if (t.imag() == 0.0 && t.real() >= 0.0 && t.real() <= L)
    throw std::invalid_argument("make_skew_context: real t inside the integration domain");

  gauss_legendre_raw(points_per_panel, ctx.gl_x, ctx.gl_w);

  std::size_t n = ctx.grid.size();
  int d = max_degree;
  ctx.w_nodes.resize(n);
  ctx.lag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = ctx.grid.nodes[i];
    ctx.w_nodes[i] = weight_w(ctx, x);
    laguerre_eval_all(d, x, params, ctx.lag[i]);
  }

  // panel prefix integrals of L_j w for every degree at once
  std::size_t np = ctx.grid.panel_edges.size() - 1;
  std::size_t ppp = static_cast<std::size_t>(points_per_panel);
  ctx.prefix.assign(d + 1, std::vector<cplx>(np + 1, cplx(0.0)));
  for (std::size_t p = 0; p < np; ++p) {
    for (int j = 0; j <= d; ++j) {
      cplx panel = 0.0;
      for (std::size_t i = p * ppp; i < (p + 1) * ppp; ++i)
        panel += ctx.grid.weights[i] * ctx.lag[i][j] * ctx.w_nodes[i];
      ctx.prefix[j][p + 1] = ctx.prefix[j][p] + panel;
    }
  }
  ctx.full.resize(d + 1);
  for (int j = 0; j <= d; ++j) ctx.full[j] = ctx.prefix[j][np];

  // cumulative integrals at the grid nodes: whole panels before + fresh rule
  // on the cut panel, Laguerre values shared across degrees per fresh point
  ctx.eps_nodes.assign(n, std::vector<cplx>(d + 1, cplx(0.0)));
  std::vector<double> lag_u;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i / ppp;
    double lo = ctx.grid.panel_edges[p], x = ctx.grid.nodes[i];
    for (int j = 0; j <= d; ++j) ctx.eps_nodes[i][j] = ctx.prefix[j][p];
    for (std::size_t q = 0; q < ppp; ++q) {
      double u = 0.5 * (lo + x) + 0.5 * (x - lo) * ctx.gl_x[q];
      double wq = 0.5 * (x - lo) * ctx.gl_w[q];
      cplx wu = weight_w(ctx, u) * wq;
      laguerre_eval_all(d, u, params, lag_u);
      for (int j = 0; j <= d; ++j) ctx.eps_nodes[i][j] += lag_u[j] * wu;
    }
  }

  // gram[j][k] = (A_{jk} - A_{kj})/2 with A_{jk} = int (L_j w)(x) E_k(x) dx
  std::vector<std::vector<cplx>> A(d + 1, std::vector<cplx>(d + 1, cplx(0.0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j <= d; ++j) {
      cplx fw = ctx.grid.weights[i] * ctx.lag[i][j] * ctx.w_nodes[i];
      for (int k = 0; k <= d; ++k) A[j][k] += fw * ctx.eps_nodes[i][k];
    }
  }
  ctx.gram.assign(d + 1, std::vector<cplx>(d + 1, cplx(0.0)));
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) ctx.gram[j][k] = 0.5 * (A[j][k] - A[k][j]);
  return ctx;
}

void cumulative_lw(const SkewWeightContext& ctx, double x, std::vector<cplx>& out) {
  int d = ctx.max_degree;
  out.assign(d + 1, cplx(0.0));
  if (x <= 0.0) return;
  if (x >= ctx.grid.b) {
    out = ctx.full;
    return;
  }
  int p = ctx.panel_of(x);
  double lo = ctx.grid.panel_edges[p];
  for (int j = 0; j <= d; ++j) out[j] = ctx.prefix[j][p];
  std::vector<double> lag_u;
  for (std::size_t q = 0; q < ctx.gl_x.size(); ++q) {
    double u = 0.5 * (lo + x) + 0.5 * (x - lo) * ctx.gl_x[q];
    double wq = 0.5 * (x - lo) * ctx.gl_w[q];
    cplx wu = weight_w(ctx, u) * wq;
    laguerre_eval_all(d, u, ctx.params, lag_u);
    for (int j = 0; j <= d; ++j) out[j] += lag_u[j] * wu;
  }
}

void eps_lw(const SkewWeightContext& ctx, double x, std::vector<cplx>& out) {
  cumulative_lw(ctx, x, out);
  for (int j = 0; j <= ctx.max_degree; ++j) out[j] -= 0.5 * ctx.full[j];
}

cplx inner2(const MonicPolynomial& f, const MonicPolynomial& g, const LaguerreParams& params) {
  int d = std::min(f.degree, g.degree);
  cplx acc = 0.0;
  for (int j = 0; j <= d; ++j) acc += f.coeffs[j] * g.coeffs[j] * laguerre_norm(j, params);
  return acc;
}

cplx skew_product(const SkewWeightContext& ctx, const MonicPolynomial& f,
                  const MonicPolynomial& g) {
  if (f.degree > ctx.max_degree || g.degree > ctx.max_degree)
    throw std::invalid_argument("skew_product: degree exceeds context cache");
  cplx acc = 0.0;
  for (int j = 0; j <= f.degree; ++j) {
    if (f.coeffs[j] == cplx(0.0)) continue;
    cplx row = 0.0;
    for (int k = 0; k <= g.degree; ++k) row += g.coeffs[k] * ctx.gram[j][k];
    acc += f.coeffs[j] * row;
  }
  return acc;
}

MonicPolynomial parts_polynomial(const SkewWeightContext& ctx, int j) {
  // Q_j = (M/2) x^{j+2} - ((M/2)t + j+1 + (M-N)/2) x^{j+1} + t(j+1 + (M-N-1)/2) x^j
  const LaguerreParams& p = ctx.params;
  double M = p.big_m, al = p.alpha();
  cplx t = ctx.t;
  auto m2 = monomial_in_laguerre(j + 2, p);
  auto m1 = monomial_in_laguerre(j + 1, p);
  auto m0 = monomial_in_laguerre(j, p);
  cplx c2 = 0.5 * M;
  cplx c1 = -(0.5 * M * t + (j + 1.0) + 0.5 * al);
  cplx c0 = t * ((j + 1.0) + 0.5 * (al - 1.0));
  std::vector<cplx> coeffs(j + 3, cplx(0.0));
  for (std::size_t i = 0; i < m2.size(); ++i) coeffs[i] += c2 * m2[i];
  for (std::size_t i = 0; i < m1.size(); ++i) coeffs[i] += c1 * m1[i];
  for (std::size_t i = 0; i < m0.size(); ++i) coeffs[i] += c0 * m0[i];
  return MonicPolynomial(std::move(coeffs));
}

SkewPolynomialPair skew_orthogonal_pair(const SkewWeightContext& ctx, int k) {
  if (k < 1) throw std::invalid_argument("skew_orthogonal_pair: k must be >= 1");
  if (2 * k + 1 > ctx.max_degree)
    throw std::invalid_argument("skew_orthogonal_pair: context cache too small");
  const auto& g = ctx.gram;
  cplx denom = g[2 * k - 1][2 * k - 2];
  double scale = 0.0;
  for (int j = 2 * k - 2; j <= 2 * k + 1; ++j)
    for (int l = 2 * k - 2; l < j; ++l) scale = std::max(scale, std::abs(g[j][l]));
  if (std::abs(denom) < 1e-12 * scale)
    throw std::runtime_error("skew_orthogonal_pair: degenerate skew product");

  cplx gamma_even = -g[2 * k][2 * k - 2] / denom;
  cplx gamma_odd_1 = -g[2 * k + 1][2 * k - 2] / denom;
  cplx gamma_odd_2 = g[2 * k + 1][2 * k - 1] / denom;

  std::vector<cplx> even(2 * k + 1, cplx(0.0));
  even[2 * k] = 1.0;
  even[2 * k - 1] = gamma_even;
  std::vector<cplx> odd(2 * k + 2, cplx(0.0));
  odd[2 * k + 1] = 1.0;
  odd[2 * k - 1] = gamma_odd_1;
  odd[2 * k - 2] = gamma_odd_2;

  SkewPolynomialPair pair{MonicPolynomial(std::move(even)), MonicPolynomial(std::move(odd)),
                          {gamma_even, gamma_odd_1, gamma_odd_2}, cplx(0.0)};
  pair.h_odd_1 = skew_product(ctx, pair.pi_even, pair.pi_odd);
  return pair;
}

}  // namespace swl
