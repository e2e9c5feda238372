#pragma once
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace swl {

// Quadrature grid over a finite interval [a,b] or a truncated semi-infinite
// domain [a,L).  Built from composite Gauss-Legendre panels; panel boundaries
// are kept so that partial integrals up to an interior point can be evaluated
// panel-exactly (needed by the cumulative transforms downstream).
struct QuadratureGrid {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  std::vector<double> panel_edges;  // boundaries, size = n_panels + 1
  int points_per_panel = 0;
  double a = 0.0;
  double b = 0.0;           // right end (truncation point when semi-infinite)
  bool semi_infinite = false;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0)) {
    decltype(f(0.0)) acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

// n-point Gauss-Legendre rule on [a,b]; exact for polynomials of degree <= 2n-1.
QuadratureGrid gauss_legendre_grid(int n, double a, double b);

// Raw nodes/weights on [-1,1].
void gauss_legendre_raw(int n, std::vector<double>& x, std::vector<double>& w);

// Composite rule for integrals of functions decaying like exp(-x/decay_scale):
// truncation L with exp(-(L-a)/decay_scale) < 1e-16, geometric panel
// refinement toward a to resolve algebraic endpoint behavior.
QuadratureGrid semi_infinite_grid(int points_per_panel, double a, double decay_scale);

// Composite rule on [a,b] with geometric refinement toward a (endpoint
// x^{p/2}-type behavior), points_per_panel Gauss-Legendre points per panel.
QuadratureGrid refined_grid(int points_per_panel, double a, double b, int n_uniform_panels = 8);

// Composite Gauss-Legendre rule over the consecutive panels
// [edges[i], edges[i+1]]; edges must be strictly increasing.
QuadratureGrid composite_grid(int points_per_panel, const std::vector<double>& edges);

// Integral of f over [grid.a, x] where x lies inside the grid span.  Whole
// panels left of x reuse the grid's own nodes; the cut panel gets a fresh
// Gauss-Legendre rule (gl_x, gl_w on [-1,1]), so the result carries full
// quadrature accuracy at arbitrary x.
template <class F>
auto partial_integral(const QuadratureGrid& g, const std::vector<double>& gl_x,
                      const std::vector<double>& gl_w, F&& f, double x) -> decltype(f(0.0)) {
  using R = decltype(f(0.0));
  R acc{};
  std::size_t ppp = static_cast<std::size_t>(g.points_per_panel);
  for (std::size_t p = 0; p + 1 < g.panel_edges.size(); ++p) {
    double lo = g.panel_edges[p], hi = g.panel_edges[p + 1];
    if (x >= hi) {
      for (std::size_t i = p * ppp; i < (p + 1) * ppp; ++i) acc += g.weights[i] * f(g.nodes[i]);
    } else {
      if (x > lo) {
        for (std::size_t i = 0; i < gl_x.size(); ++i) {
          double u = 0.5 * (lo + x) + 0.5 * (x - lo) * gl_x[i];
          acc += 0.5 * (x - lo) * gl_w[i] * f(u);
        }
      }
      break;
    }
  }
  return acc;
}

// Prefix integrals at panel boundaries: out[p] = integral over panels 0..p-1,
// evaluated on the grid's own nodes.
template <class F, class R>
void panel_prefix_integrals(const QuadratureGrid& g, F&& f, std::vector<R>& out) {
  std::size_t np = g.panel_edges.size() - 1;
  std::size_t ppp = static_cast<std::size_t>(g.points_per_panel);
  out.assign(np + 1, R{});
  for (std::size_t p = 0; p < np; ++p) {
    R panel{};
    for (std::size_t i = p * ppp; i < (p + 1) * ppp; ++i) panel += g.weights[i] * f(g.nodes[i]);
    out[p + 1] = out[p] + panel;
  }
}

struct ToleranceConfig {
  double quad_rel_tol = 1e-10;
  double ode_rel_tol = 1e-10;
  double det_rank_cutoff = 1e-12;
};

}  // namespace swl
