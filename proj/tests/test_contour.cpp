#include "doctest.h"

#include <cmath>
#include <complex>

#include "swl/branch.hpp"
#include "swl/contour.hpp"

using swl::cplx;

TEST_CASE("cauchy_integral_of_enclosed_pole") {
  auto c = swl::contour_around_segment(0.0, 4.0, 1.0, 200);
  // closed curve encircling t = 2 once counter-clockwise: contour integral of
  // dt/(t-2) equals 2*pi*i
  cplx got = c.integrate([](cplx t) { return 1.0 / (t - 2.0); });
  cplx want(0.0, 2.0 * M_PI);
  CHECK(std::abs(got - want) < 1e-12);
}

TEST_CASE("entire_integrand_vanishes") {
  auto c = swl::contour_around_segment(-1.0, 3.0, 0.5, 160);
  cplx got = c.integrate([](cplx t) { return t * t + 3.0 * t + 1.0; });
  CHECK(std::abs(got) < 1e-12);
}

TEST_CASE("winding_numbers") {
  auto c = swl::contour_around_segment(1.0, 5.0, 0.5, 240);
  CHECK(swl::winding_number(c, cplx(3.0, 0.0)) == 1);
  CHECK(swl::winding_number(c, cplx(0.2, 0.0)) == 0);
  CHECK(swl::winding_number(c, cplx(3.0, 50.0)) == 0);
  CHECK(c.x_left < 1.0);
  CHECK(c.x_right > 5.0);
}

TEST_CASE("contour_independence_for_branch_integrand") {
  // integrand with a cut on [0, 4]: product of two half-line branch factors;
  // any contour enclosing the cut gives the same value
  auto f = [](cplx t) { return swl::branch_sqrt_inv(t, 1.0) * swl::branch_sqrt_inv(t, 3.0); };
  auto c1 = swl::contour_around_segment(0.0, 4.0, 0.7, 260);
  auto c2 = swl::contour_around_segment(0.0, 4.0, 2.9, 260);
  cplx v1 = c1.integrate(f);
  cplx v2 = c2.integrate(f);
  CHECK(std::abs(v1 - v2) < 1e-11 * std::abs(v1));
  CHECK(std::abs(v1) > 1.0);  // nondegenerate
}

TEST_CASE("branch_sqrt_inv_principal_values") {
  // above the cut the factor (t - x)^{-1/2} continues off arg(t-x) = pi
  cplx v = swl::branch_sqrt_inv(cplx(2.0, 0.0), 1.0);
  CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
  // conjugate symmetry between the contour's upper and lower halves
  cplx up = swl::branch_sqrt_inv(cplx(1.0, 0.5), 2.0);
  cplx dn = swl::branch_sqrt_inv(cplx(1.0, -0.5), 2.0);
  CHECK(std::abs(up - std::conj(dn)) < 1e-14);
  // square reproduces 1/(t-x)
  cplx t(0.3, 0.8);
  cplx s = swl::branch_sqrt_inv(t, 2.5);
  CHECK(std::abs(s * s - 1.0 / (t - 2.5)) < 1e-14);
}
