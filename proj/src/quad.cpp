#include "swl/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace swl {

void gauss_legendre_raw(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

QuadratureGrid gauss_legendre_grid(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_grid: n < 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre_grid: invalid interval");
  std::vector<double> x, w;
  gauss_legendre_raw(n, x, w);
  QuadratureGrid g;
  g.a = a;
  g.b = b;
  g.points_per_panel = n;
  g.panel_edges = {a, b};
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
    g.weights[i] = 0.5 * (b - a) * w[i];
  }
  return g;
}

QuadratureGrid composite_grid(int ppp, const std::vector<double>& edges) {
  if (ppp < 1) throw std::invalid_argument("composite_grid: points < 1");
  if (edges.size() < 2) throw std::invalid_argument("composite_grid: need at least one panel");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (!(edges[i] < edges[i + 1])) throw std::invalid_argument("composite_grid: edges not increasing");
  std::vector<double> x, w;
  gauss_legendre_raw(ppp, x, w);
  QuadratureGrid g;
  g.a = edges.front();
  g.b = edges.back();
  g.points_per_panel = ppp;
  g.panel_edges = edges;
  std::size_t np = edges.size() - 1;
  g.nodes.reserve(np * ppp);
  g.weights.reserve(np * ppp);
  for (std::size_t p = 0; p < np; ++p) {
    double lo = edges[p], hi = edges[p + 1];
    for (int i = 0; i < ppp; ++i) {
      g.nodes.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * x[i]);
      g.weights.push_back(0.5 * (hi - lo) * w[i]);
    }
  }
  return g;
}

// Panel layout shared by the semi-infinite and refined builders: geometric
// panels growing away from `a` until the panel width reaches `h_max`, then
// uniform panels up to `L`.
static std::vector<double> geometric_edges(double a, double L, double h0, double h_max) {
  std::vector<double> edges{a};
  double pos = a, h = h0;
  while (pos < L) {
    pos = std::min(pos + h, L);
    edges.push_back(pos);
    h = std::min(h * 2.0, h_max);
  }
  return edges;
}

QuadratureGrid semi_infinite_grid(int ppp, double a, double decay_scale) {
  if (ppp < 1) throw std::invalid_argument("semi_infinite_grid: points < 1");
  if (!(decay_scale > 0.0)) throw std::invalid_argument("semi_infinite_grid: decay_scale <= 0");
  double L = a + 40.0 * decay_scale;  // exp(-40) ~ 4e-18 below peak
  double h0 = (L - a) * 1e-6;
  double h_max = decay_scale;
  QuadratureGrid g = composite_grid(ppp, geometric_edges(a, L, h0, h_max));
  g.semi_infinite = true;
  return g;
}

QuadratureGrid refined_grid(int ppp, double a, double b, int n_uniform_panels) {
  if (ppp < 1) throw std::invalid_argument("refined_grid: points < 1");
  if (!(a < b)) throw std::invalid_argument("refined_grid: invalid interval");
  double h_max = (b - a) / std::max(1, n_uniform_panels);
  double h0 = (b - a) * 1e-6;
  return composite_grid(ppp, geometric_edges(a, b, h0, h_max));
}

}  // namespace swl
