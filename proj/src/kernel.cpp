#include "swl/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace swl {

namespace {

// Relative spacing below which the Christoffel-Darboux divided difference
// switches to its Taylor expansion around the diagonal.
constexpr double kCdSwitch = 1e-5;

// W_k = L_N L_{N-1}^{(k)} - L_N^{(k)} L_{N-1} at a single point, k = 0..4.
std::array<double, 5> diagonal_wronskians(const KernelContext& kc, double x) {
  const int n = kc.n();
  std::vector<double> tab;
  laguerre_eval_all_derivs(n, x, kc.skew.params, 4, tab);
  const int cols = n + 1;
  std::array<double, 5> w{};
  for (int k = 0; k <= 4; ++k)
    w[k] = tab[n] * tab[k * cols + n - 1] - tab[k * cols + n] * tab[n - 1];
  return w;
}

// P(x,y) = (L_N(x)L_{N-1}(y) - L_N(y)L_{N-1}(x)) / (x - y) and its
// y-derivative; both smooth across the diagonal.
void cd_divided_difference(const KernelContext& kc, const KernelPointCache& a,
                           const KernelPointCache& b, double& p, double& dp) {
  const int n = kc.n();
  double d = b.x - a.x;
  if (std::abs(d) > kCdSwitch * (1.0 + std::abs(a.x) + std::abs(b.x))) {
    double num = a.lag[n] * b.lag[n - 1] - b.lag[n] * a.lag[n - 1];
    p = -num / d;
    double dnum = a.lag[n] * b.dlag[n - 1] - b.dlag[n] * a.lag[n - 1];
    dp = -(dnum + p) / d;
    return;
  }
  auto w = diagonal_wronskians(kc, a.x);
  p = -(w[1] + d * (w[2] / 2.0 + d * (w[3] / 6.0 + d * w[4] / 24.0)));
  dp = -(w[2] / 2.0 + d * (w[3] / 3.0 + d * w[4] / 8.0));
}

cplx k2_from_p(const KernelContext& kc, const KernelPointCache& a, const KernelPointCache& b,
               double p) {
  cplx t = kc.t();
  return a.w * b.w * b.x * (t - b.x) * p / kc.h[kc.n() - 1];
}

// int_0^c S1(u,y) du from a cumulative table at c and the point tables at y.
cplx s1_cumulative(const KernelContext& kc, const std::vector<cplx>& cum,
                   const KernelPointCache& b) {
  const int n = kc.n();
  cplx t = kc.t();
  cplx acc(0.0);
  for (int j = 0; j < n; ++j) acc += cum[j] * b.lag[j] * std::exp(-kc.log_h[j]);
  acc *= b.w * b.x * (t - b.x);
  for (int m = 0; m < 5; ++m)
    acc += kc.term_coef[m] * b.eps[kc.term_eps[m]] * cum[kc.term_poly[m]];
  return acc;
}

}  // namespace

KernelContext make_kernel_context(const LaguerreParams& params, cplx t,
                                  std::optional<double> z_truncation, int points_per_panel) {
  const int n = params.big_n;
  const double m = params.big_m;
  if (n < 2) throw std::invalid_argument("make_kernel_context: need N >= 2");

  KernelContext kc{make_skew_context(params, t, n + 1, z_truncation, points_per_panel),
                   {}, {}, {}, {}, {}, {}, {}, {}, {}};
  kc.h.resize(n + 2);
  kc.log_h.resize(n + 2);
  for (int j = 0; j <= n + 1; ++j) {
    kc.log_h[j] = laguerre_log_norm(j, params);
    kc.h[j] = std::exp(kc.log_h[j]);
  }

  kc.s_n_nm2 = kc.skew.gram[n][n - 2];
  kc.s_nm1_nm2 = kc.skew.gram[n - 1][n - 2];
  kc.s_np1_nm1 = kc.skew.gram[n + 1][n - 1];
  kc.s_np1_nm2 = kc.skew.gram[n + 1][n - 2];

  double block_scale = 0.0;
  for (int j = n - 2; j <= n + 1; ++j)
    for (int k = n - 2; k <= n + 1; ++k)
      block_scale = std::max(block_scale, std::abs(kc.skew.gram[j][k]));
  if (std::abs(kc.s_nm1_nm2) < 1e-12 * block_scale)
    throw std::runtime_error("make_kernel_context: <L_{N-1},L_{N-2}>_1 degenerates");

  // Sanity guard against assembly bugs (which violate these at O(1)).  The
  // tolerance is loose on purpose: with a truncation point z the identities
  // pick up a genuine boundary term (1/2) z^{j+1}(t-z) w(z); far-out real
  // t leaves only a few cancellation-limited digits in the near-degenerate
  // products; and t close to the real axis with Re t inside the support
  // concentrates the (t-x)^{-1/2} factor into a width-|Im t| feature the
  // tables resolve only to ~1e-4 relative.  Full-domain accuracy is pinned
  // at 1e-8 in the skew tests.
  cplx want_a = kc.s_n_nm2 * ((n - 1.0) * (m - 1.0) / (m * m));
  cplx want_b = kc.s_n_nm2 * (m * t - (n + m)) / m;
  if (std::abs(kc.s_np1_nm1 - want_a) > 1e-3 * block_scale ||
      std::abs(kc.s_np1_nm2 - want_b) > 1e-3 * std::max(block_scale, std::abs(want_b)))
    throw std::runtime_error("make_kernel_context: degree-shift identities violated");

  cplx g = kc.s_n_nm2 / kc.s_nm1_nm2;
  double h_nm1 = kc.h[n - 1], h_nm2 = kc.h[n - 2];
  kc.term_eps = {n, n - 1, n - 2, n + 1, n};
  kc.term_poly = {n - 2, n - 2, n - 1, n - 1, n - 1};
  kc.term_coef = {cplx(-m / (2.0 * h_nm2)), g * (m / (2.0 * h_nm2)), -g * (m / (2.0 * h_nm2)),
                  cplx(-m / (2.0 * h_nm1)), (m * t - (n + m)) / (2.0 * h_nm1)};
  return kc;
}

cplx epsilon_transform(const SkewWeightContext& ctx, const std::vector<cplx>& fw_samples,
                       double y) {
  const auto& g = ctx.grid;
  if (fw_samples.size() != g.nodes.size())
    throw std::invalid_argument("epsilon_transform: sample count != grid size");
  if (y < 0.0 || y > g.b) throw std::out_of_range("epsilon_transform: y outside grid span");

  cplx total(0.0);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) total += g.weights[i] * fw_samples[i];

  // Prefix over whole panels left of y; the cut panel integrates the Lagrange
  // interpolant of that panel's samples (barycentric form) so the prefix keeps
  // full quadrature accuracy at arbitrary y.
  cplx acc(0.0);
  const std::size_t ppp = static_cast<std::size_t>(g.points_per_panel);
  for (std::size_t p = 0; p + 1 < g.panel_edges.size(); ++p) {
    double lo = g.panel_edges[p], hi = g.panel_edges[p + 1];
    if (y >= hi) {
      for (std::size_t i = p * ppp; i < (p + 1) * ppp; ++i) acc += g.weights[i] * fw_samples[i];
      continue;
    }
    if (y > lo) {
      std::vector<double> xi(ppp), beta(ppp);
      for (std::size_t k = 0; k < ppp; ++k)
        xi[k] = (2.0 * g.nodes[p * ppp + k] - lo - hi) / (hi - lo);
      for (std::size_t k = 0; k < ppp; ++k) {
        double prod = 1.0;
        for (std::size_t j = 0; j < ppp; ++j)
          if (j != k) prod *= xi[k] - xi[j];
        beta[k] = 1.0 / prod;
      }
      for (std::size_t q = 0; q < ctx.gl_x.size(); ++q) {
        double u = 0.5 * (lo + y) + 0.5 * (y - lo) * ctx.gl_x[q];
        double xiu = (2.0 * u - lo - hi) / (hi - lo);
        cplx num(0.0);
        double den = 0.0;
        bool hit = false;
        cplx val(0.0);
        for (std::size_t k = 0; k < ppp; ++k) {
          double d = xiu - xi[k];
          if (std::abs(d) < 1e-14) {
            val = fw_samples[p * ppp + k];
            hit = true;
            break;
          }
          num += (beta[k] / d) * fw_samples[p * ppp + k];
          den += beta[k] / d;
        }
        if (!hit) val = num / den;
        acc += 0.5 * (y - lo) * ctx.gl_w[q] * val;
      }
    }
    break;
  }
  return acc - 0.5 * total;
}

KernelPointCache kernel_point_cache(const KernelContext& kc, double x) {
  if (!(x > 0.0) || x > kc.skew.grid.b)
    throw std::out_of_range("kernel_point_cache: x outside (0, L]");
  const auto& p = kc.skew.params;
  KernelPointCache c;
  c.x = x;
  std::vector<double> tab;
  laguerre_eval_all_derivs(p.big_n + 1, x, p, 1, tab);
  const int cols = p.big_n + 2;
  c.lag.assign(tab.begin(), tab.begin() + cols);
  c.dlag.assign(tab.begin() + cols, tab.begin() + 2 * cols);
  c.w = weight_w(kc.skew, x);
  c.dw = c.w * (-0.5 * p.big_m + 0.5 * (p.alpha() - 1.0) / x +
                0.5 / (kc.t() - x));
  eps_lw(kc.skew, x, c.eps);
  cumulative_lw(kc.skew, x, c.cum);
  return c;
}

cplx kernel_K2_cached(const KernelContext& kc, const KernelPointCache& a,
                      const KernelPointCache& b) {
  double p, dp;
  cd_divided_difference(kc, a, b, p, dp);
  return k2_from_p(kc, a, b, p);
}

cplx kernel_K2(const KernelContext& kc, double x, double y) {
  return kernel_K2_cached(kc, kernel_point_cache(kc, x), kernel_point_cache(kc, y));
}

cplx kernel_K1_cached(const KernelContext& kc, const KernelPointCache& a,
                      const KernelPointCache& b) {
  cplx acc(0.0);
  for (int m = 0; m < 5; ++m)
    acc += kc.term_coef[m] * b.eps[kc.term_eps[m]] * a.lag[kc.term_poly[m]];
  return acc * a.w;
}

cplx kernel_K1(const KernelContext& kc, double x, double y) {
  return kernel_K1_cached(kc, kernel_point_cache(kc, x), kernel_point_cache(kc, y));
}

cplx kernel_S1_cached(const KernelContext& kc, const KernelPointCache& a,
                      const KernelPointCache& b) {
  return kernel_K2_cached(kc, a, b) + kernel_K1_cached(kc, a, b);
}

cplx kernel_S1(const KernelContext& kc, double x, double y) {
  return kernel_S1_cached(kc, kernel_point_cache(kc, x), kernel_point_cache(kc, y));
}

std::array<cplx, 4> matrix_kernel_cached(const KernelContext& kc, const KernelPointCache& a,
                                         const KernelPointCache& b) {
  cplx t = kc.t();
  double p, dp;
  cd_divided_difference(kc, a, b, p, dp);
  cplx k2 = k2_from_p(kc, a, b, p);
  cplx k1 = kernel_K1_cached(kc, a, b);

  double y = b.x;
  cplx dk2 = a.w / kc.h[kc.n() - 1] *
             (b.dw * y * (t - y) * p + b.w * (t - 2.0 * y) * p + b.w * y * (t - y) * dp);
  cplx dk1(0.0);
  for (int m = 0; m < 5; ++m)
    dk1 += kc.term_coef[m] * b.lag[kc.term_eps[m]] * b.w * a.lag[kc.term_poly[m]];
  dk1 *= a.w;

  cplx is1 = s1_cumulative(kc, a.cum, b) - s1_cumulative(kc, b.cum, b);
  double sgn = (a.x > b.x) ? 1.0 : (a.x < b.x ? -1.0 : 0.0);

  cplx s1_yx = kernel_S1_cached(kc, b, a);
  return {k2 + k1, -(dk2 + dk1), is1 - 0.5 * sgn, s1_yx};
}

std::array<cplx, 4> matrix_kernel(const KernelContext& kc, double x, double y) {
  return matrix_kernel_cached(kc, kernel_point_cache(kc, x), kernel_point_cache(kc, y));
}

cplx logderiv_detD(const KernelContext& kc, cplx t) {
  if (std::abs(t - kc.t()) > 1e-12 * (1.0 + std::abs(t)))
    throw std::invalid_argument("logderiv_detD: context built at different t");
  const auto& sk = kc.skew;
  const int n = kc.n();
  cplx acc(0.0);
  for (std::size_t i = 0; i < sk.grid.nodes.size(); ++i) {
    double x = sk.grid.nodes[i];
    double cd = 0.0;
    for (int j = 0; j < n; ++j)
      cd += sk.lag[i][j] * sk.lag[i][j] * std::exp(-kc.log_h[j]);
    cplx w = sk.w_nodes[i];
    cplx diag = w * w * x * (t - x) * cd;
    for (int m = 0; m < 5; ++m) {
      cplx eps = sk.eps_nodes[i][kc.term_eps[m]] - 0.5 * sk.full[kc.term_eps[m]];
      diag += kc.term_coef[m] * eps * sk.lag[i][kc.term_poly[m]] * w;
    }
    acc += sk.grid.weights[i] * diag / (t - x);
  }
  return -acc;
}

}  // namespace swl
