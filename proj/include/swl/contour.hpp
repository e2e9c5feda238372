#pragma once
#include <complex>
#include <vector>

#include "swl/branch.hpp"

namespace swl {

// Closed counter-clockwise curve in the complex plane discretized for path
// integrals: integral f(t) dt ~ sum_i weights[i] * f(points[i]).  points is
// stored closed (front == back); weights align with points[0..n-1].
struct ContourPath {
  std::vector<cplx> points;
  std::vector<cplx> weights;
  double x_left = 0.0;   // real-axis crossings
  double x_right = 0.0;

  std::size_t size() const { return weights.size(); }

  template <class F>
  cplx integrate(F&& f) const {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) acc += weights[i] * f(points[i]);
    return acc;
  }
};

// Ellipse enclosing [a - margin, b + margin], counter-clockwise, trapezoidal
// parameter weights (spectrally accurate for periodic integrands), nodes kept
// off the real axis by a half-step parameter offset.
ContourPath contour_around_segment(double a, double b, double margin, int n_nodes);

// Winding number of the contour about z (rounded Cauchy integral).
int winding_number(const ContourPath& c, cplx z);

}  // namespace swl
