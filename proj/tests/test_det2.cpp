#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "swl/det2.hpp"
#include "swl/quad.hpp"

using swl::cplx;
using swl::Det2Result;
using swl::MatrixKernelFn;
using swl::QuadratureGrid;

namespace {

QuadratureGrid uniform_grid(double a, double b, int panels, int ppp) {
  std::vector<double> edges(panels + 1);
  for (int i = 0; i <= panels; ++i) edges[i] = a + (b - a) * i / panels;
  return swl::composite_grid(ppp, edges);
}

std::function<double(double)> sqrt_balance() {
  return [](double xi) { return std::sqrt(1.0 + xi * xi); };
}

}  // namespace

TEST_CASE("det2 of the zero kernel is exactly one") {
  MatrixKernelFn zero = [](double, double) {
    return std::array<cplx, 4>{cplx(0.0), cplx(0.0), cplx(0.0), cplx(0.0)};
  };
  QuadratureGrid g = uniform_grid(0.0, 10.0, 4, 12);
  for (int blocks : {1, 2}) {
    Det2Result r = swl::det2_nystrom(zero, blocks, 0.0, g, {});
    CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(r.value.imag()) < 1e-14);
    CHECK(std::abs(r.trace_correction) < 1e-14);
    // The reported dimension is that of the full-order grid.
    CHECK(r.eigenvalues_used == blocks * 4 * 12);
  }
}

TEST_CASE("rank-1 scalar kernel reproduces the closed form (1-s)e^s") {
  // K(x,y) = a(x) b(y) with a = b = e^{-x} on [0, 20]: s = (1 - e^{-40})/2.
  MatrixKernelFn k = [](double x, double y) {
    return std::array<cplx, 4>{cplx(std::exp(-x - y)), cplx(0.0), cplx(0.0), cplx(0.0)};
  };
  QuadratureGrid g = uniform_grid(0.0, 20.0, 5, 14);
  double s = 0.5 * (1.0 - std::exp(-40.0));
  Det2Result r = swl::det2_nystrom(k, 1, 0.0, g, {});
  CHECK(r.value.real() == doctest::Approx((1.0 - s) * std::exp(s)).epsilon(1e-10));
  CHECK(std::abs(r.value.imag()) < 1e-12);
  CHECK(swl::det2_with_trace(r).real() == doctest::Approx(1.0 - s).epsilon(1e-10));
}

TEST_CASE("balance conjugation leaves the determinant unchanged") {
  MatrixKernelFn k = [](double x, double y) {
    double d = std::exp(-x - y);
    return std::array<cplx, 4>{cplx(d), cplx(d * (x - y) * 3.0), cplx(d / (1.0 + x + y)),
                               cplx(d * std::cos(x - y))};
  };
  QuadratureGrid g = uniform_grid(0.0, 18.0, 5, 12);
  Det2Result plain = swl::det2_nystrom(k, 2, 0.0, g, {});
  Det2Result balanced = swl::det2_nystrom(k, 2, 0.0, g, sqrt_balance());
  CHECK(std::abs(swl::det2_with_trace(plain) - swl::det2_with_trace(balanced)) < 1e-11);
  CHECK(std::abs(plain.value - balanced.value) < 1e-11);
}

TEST_CASE("pure off-diagonal blocks couple through the product of the two ranks") {
  // K12 = a(x)b(y), K21 = a(x)b(y), all with a = b = e^{-x}: the operator is
  // block off-diagonal, det(I - K) = 1 - s^2 with s = int a b, and the
  // diagonal-block traces vanish.
  MatrixKernelFn k = [](double x, double y) {
    double d = std::exp(-x - y);
    return std::array<cplx, 4>{cplx(0.0), cplx(d), cplx(d), cplx(0.0)};
  };
  QuadratureGrid g = uniform_grid(0.0, 20.0, 5, 14);
  double s = 0.5 * (1.0 - std::exp(-40.0));
  Det2Result r = swl::det2_nystrom(k, 2, 0.0, g, sqrt_balance());
  CHECK(std::abs(r.trace_correction) < 1e-13);
  CHECK(swl::det2_with_trace(r).real() == doctest::Approx(1.0 - s * s).epsilon(1e-10));

  // A single off-diagonal block is nilpotent: determinant exactly one.
  MatrixKernelFn upper = [](double x, double y) {
    return std::array<cplx, 4>{cplx(0.0), cplx(std::exp(-x - y)), cplx(0.0), cplx(0.0)};
  };
  Det2Result ru = swl::det2_nystrom(upper, 2, 0.0, g, sqrt_balance());
  CHECK(swl::det2_with_trace(ru).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("det2 preconditions and failure modes") {
  QuadratureGrid g = uniform_grid(0.0, 10.0, 4, 10);

  // Non-decaying kernel fails the tail sampling.
  MatrixKernelFn flat = [](double, double) {
    return std::array<cplx, 4>{cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)};
  };
  CHECK_THROWS_AS(swl::det2_nystrom(flat, 1, 0.0, g, {}), std::domain_error);

  // Grid starting off `lower` is rejected.
  MatrixKernelFn decaying = [](double x, double y) {
    return std::array<cplx, 4>{cplx(std::exp(-x - y)), cplx(0.0), cplx(0.0), cplx(0.0)};
  };
  CHECK_THROWS_AS(swl::det2_nystrom(decaying, 1, 1.0, g, {}), std::invalid_argument);
  CHECK_THROWS_AS(swl::det2_nystrom(decaying, 3, 0.0, g, {}), std::invalid_argument);

  // A kernel the rule cannot resolve trips the refinement cross-check.
  MatrixKernelFn wiggly = [](double x, double y) {
    return std::array<cplx, 4>{cplx(std::cos(40.0 * x) * std::cos(40.0 * y) * std::exp(-x - y)),
                               cplx(0.0), cplx(0.0), cplx(0.0)};
  };
  QuadratureGrid coarse = uniform_grid(0.0, 14.0, 1, 6);
  CHECK_THROWS_AS(swl::det2_nystrom(wiggly, 1, 0.0, coarse, {}), std::runtime_error);
}
