#include "swl/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace swl {

ContourPath contour_around_segment(double a, double b, double margin, int n_nodes) {
  if (!(a < b)) throw std::invalid_argument("contour_around_segment: a >= b");
  if (!(margin > 0.0)) throw std::invalid_argument("contour_around_segment: margin <= 0");
  if (n_nodes < 8) throw std::invalid_argument("contour_around_segment: too few nodes");
  double cx = 0.5 * (a + b);
  double rx = 0.5 * (b - a) + margin;
  double ry = std::max(0.5 * margin, 0.25 * rx);

  ContourPath c;
  c.x_left = cx - rx;
  c.x_right = cx + rx;
  c.points.resize(n_nodes + 1);
  c.weights.resize(n_nodes);
  double dth = 2.0 * M_PI / n_nodes;
  for (int k = 0; k < n_nodes; ++k) {
    // Half-step offset keeps every node off the real axis for even n_nodes.
    double th = dth * (k + 0.5);
    c.points[k] = cplx(cx + rx * std::cos(th), ry * std::sin(th));
    c.weights[k] = dth * cplx(-rx * std::sin(th), ry * std::cos(th));
  }
  c.points[n_nodes] = c.points[0];
  return c;
}

int winding_number(const ContourPath& c, cplx z) {
  cplx val = c.integrate([&](cplx t) { return 1.0 / (t - z); });
  double w = (val / cplx(0.0, 2.0 * M_PI)).real();
  return (int)std::lround(w);
}

}  // namespace swl
