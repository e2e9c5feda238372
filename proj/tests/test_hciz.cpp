#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "swl/contour.hpp"
#include "swl/hciz.hpp"

using namespace swl;

namespace {

ContourPath around(const std::vector<double>& pts, double margin, int n_nodes) {
  double lo = pts[0], hi = pts[0];
  for (double p : pts) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return contour_around_segment(lo, hi, margin, n_nodes);
}

// Two-eigenvalue density built from the angular-average group integral, for
// normalization-free ratio checks against the contour evaluation.
double jpdf_so2_oracle(const LaguerreParams& p, const std::vector<double>& l, double tau) {
  double m = p.big_m;
  double c = m * tau / (2.0 * (1.0 + tau));
  double w = std::abs(l[1] - l[0]);
  for (double li : l) w *= std::exp(-0.5 * m * li) * std::pow(li, 0.5 * (m - p.big_n - 1.0));
  return w * hciz_direct_so2(l[0], l[1], c);
}

}  // namespace

TEST_CASE("hciz_so2_constant_exponents") {
  CHECK(hciz_direct_so2(0.7, -1.3, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  double a = 0.7, c = 1.3;
  double expected = std::exp(c * a);
  CHECK(std::abs(hciz_direct_so2(a, a, c) - expected) < 1e-12 * expected);
}

TEST_CASE("hciz_so2_bessel_closed_form") {
  // (1/2pi) int_0^{2pi} e^{sin^2 t} dt = e^{1/2} I_0(1/2) = 1.753388...
  double expected = std::exp(0.5) * std::cyl_bessel_i(0.0, 0.5);
  CHECK(expected == doctest::Approx(1.753388).epsilon(1e-6));
  CHECK(std::abs(hciz_direct_so2(1.0, 0.0, 1.0) - expected) < 1e-12);
}

TEST_CASE("zonal_Zk_IN_values") {
  CHECK(zonal_Zk_IN(0, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(zonal_Zk_IN(0, 8) == doctest::Approx(1.0).epsilon(1e-14));
  for (int n : {2, 4, 8})
    CHECK(zonal_Zk_IN(1, n) == doctest::Approx(static_cast<double>(n)).epsilon(1e-14));
  CHECK(zonal_Zk_IN(2, 2) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(zonal_Zk_IN(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(zonal_Zk_IN(2, 3), std::invalid_argument);
}

TEST_CASE("zonal_coeffs_trace_at_k1") {
  std::vector<double> x = {0.3, 1.7, 2.0};
  std::vector<double> z = zonal_coeffs_Zk_X(x, 4);
  CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(z[1] == doctest::Approx(0.3 + 1.7 + 2.0).epsilon(1e-13));
}

TEST_CASE("zonal_coeffs_identity_matrix_two_routes") {
  for (int n : {2, 4, 6}) {
    std::vector<double> ones(n, 1.0);
    std::vector<double> z = zonal_coeffs_Zk_X(ones, 20);
    for (int k = 0; k <= 20; ++k) {
      double ref = zonal_Zk_IN(k, n);
      CHECK(std::abs(z[k] - ref) < 1e-10 * ref);
    }
  }
}

TEST_CASE("zonal_coeffs_single_eigenvalue_closed_form") {
  // One 1x1 block: only the single-row partition survives, Z_k((a)) = a^k.
  for (double a : {1.3, 0.8}) {
    std::vector<double> z = zonal_coeffs_Zk_X({a}, 25);
    double pw = 1.0;
    for (int k = 0; k <= 25; ++k) {
      CHECK(std::abs(z[k] - pw) < 1e-12 * std::abs(pw));
      pw *= a;
    }
  }
}

TEST_CASE("zonal_coeffs_preconditions") {
  CHECK_THROWS_AS(zonal_coeffs_Zk_X({1.0}, 61), std::invalid_argument);
  CHECK_THROWS_AS(zonal_coeffs_Zk_X({1.0}, -1), std::invalid_argument);
  CHECK_THROWS_AS(zonal_coeffs_Zk_X({}, 5), std::invalid_argument);
}

TEST_CASE("zonal_genfun_partial_sums_cauchy_and_limit") {
  ZonalSeriesSpec spec{{1.0, 0.5}, 0.6, 0, 0.5};
  // radius parameter 2 theta max|x| y = 0.6 < 1
  double closed = 1.0;
  for (double xi : spec.eigenvalues_x) closed *= 1.0 / std::sqrt(1.0 - 2.0 * spec.theta * xi * spec.y);

  std::vector<double> partial;
  for (int K = 5; K <= 55; K += 10) {
    spec.k_max = K;
    partial.push_back(zonal_genfun_partial(spec));
  }
  std::vector<double> inc;
  for (std::size_t i = 1; i < partial.size(); ++i) inc.push_back(std::abs(partial[i] - partial[i - 1]));
  for (std::size_t i = 1; i < inc.size(); ++i) CHECK(inc[i] < 0.5 * inc[i - 1]);
  CHECK(std::abs(partial.back() - closed) < 1e-9 * closed);

  ZonalSeriesSpec outside{{1.0, 0.5}, 0.6, 10, 2.0};
  CHECK_THROWS_AS(zonal_genfun_partial(outside), std::domain_error);
}

TEST_CASE("hciz_contour_rank1_y_zero_is_one") {
  ContourPath c2 = contour_around_segment(-0.5, 0.5, 0.5, 300);
  cplx v2 = hciz_contour_rank1({0.3, 1.7}, 0.0, c2);
  CHECK(std::abs(v2 - cplx(1.0)) < 1e-10);
  cplx v4 = hciz_contour_rank1({0.3, 1.7, 0.9, 2.5}, 0.0, c2);
  CHECK(std::abs(v4 - cplx(1.0)) < 1e-10);
}

TEST_CASE("hciz_contour_rank1_matches_so2_oracle") {
  struct Pt {
    double x1, x2, y;
  };
  for (Pt p : {Pt{1.0, 0.0, 0.3}, Pt{2.0, -1.0, 0.2}}) {
    ContourPath c = around({p.x1 * p.y, p.x2 * p.y}, 1.0, 480);
    cplx v = hciz_contour_rank1({p.x1, p.x2}, p.y, c);
    double ref = hciz_direct_so2(p.x1, p.x2, p.y);
    CHECK(std::abs(v - cplx(ref)) < 1e-8 * ref);
  }
}

TEST_CASE("hciz_contour_rank1_matches_zonal_series") {
  {
    ContourPath c = around({0.9 * 0.5, 0.4 * 0.5}, 1.0, 480);
    cplx v = hciz_contour_rank1({0.9, 0.4}, 0.5, c);
    double ref = zonal_series_hciz({0.9, 0.4}, 0.5, 40);
    CHECK(std::abs(v - cplx(ref)) < 1e-6 * ref);
  }
  {
    std::vector<double> x = {1.0, 0.5, 0.25, 0.1};
    ContourPath c = around({0.03, 0.3}, 1.0, 480);
    cplx v = hciz_contour_rank1(x, 0.3, c);
    double ref = zonal_series_hciz(x, 0.3, 40);
    CHECK(std::abs(v - cplx(ref)) < 1e-6 * ref);
  }
}

TEST_CASE("hciz_three_route_agreement_sweep") {
  struct Pt {
    double x1, x2, y;
  };
  for (Pt p : {Pt{1.0, 0.0, 0.3}, Pt{2.0, -1.0, 0.2}, Pt{0.5, 0.25, 0.8}, Pt{3.0, 1.0, 0.25},
               Pt{1.5, -0.5, 0.4}}) {
    ContourPath c = around({p.x1 * p.y, p.x2 * p.y}, 1.0, 480);
    double contour_route = hciz_contour_rank1({p.x1, p.x2}, p.y, c).real();
    double angular_route = hciz_direct_so2(p.x1, p.x2, p.y);
    double series_route = zonal_series_hciz({p.x1, p.x2}, p.y, 56);
    CHECK(std::abs(contour_route - angular_route) < 1e-6 * angular_route);
    CHECK(std::abs(series_route - angular_route) < 1e-6 * angular_route);
  }
}

TEST_CASE("hciz_contour_rank1_preconditions") {
  ContourPath c = contour_around_segment(0.0, 2.0, 0.5, 200);
  CHECK_THROWS_AS(hciz_contour_rank1({1.0, 2.0, 3.0}, 0.5, c), std::invalid_argument);
  CHECK_THROWS_AS(hciz_contour_rank1({}, 0.5, c), std::invalid_argument);
  // 5.0 * 1.0 lies outside the contour
  CHECK_THROWS_AS(hciz_contour_rank1({5.0, 1.0}, 1.0, c), std::invalid_argument);
}

TEST_CASE("jpdf_contour_permutation_symmetry") {
  LaguerreParams p(5, 2);
  ContourPath c = contour_around_segment(1.0, 2.5, 1.0, 360);
  double a = jpdf_contour_eval(p, {1.1, 2.3}, 0.8, c);
  double b = jpdf_contour_eval(p, {2.3, 1.1}, 0.8, c);
  CHECK(std::abs(a - b) < 1e-13 * std::abs(a));
}

TEST_CASE("jpdf_contour_ratio_matches_so2_oracle") {
  LaguerreParams p(7, 2);
  std::vector<double> l1 = {0.9, 2.1}, l2 = {1.4, 3.0};
  ContourPath c = contour_around_segment(0.8, 3.1, 1.0, 480);
  for (double tau : {0.9, -0.45}) {
    double r_contour = jpdf_contour_eval(p, l1, tau, c) / jpdf_contour_eval(p, l2, tau, c);
    double r_oracle = jpdf_so2_oracle(p, l1, tau) / jpdf_so2_oracle(p, l2, tau);
    CHECK(std::abs(r_contour - r_oracle) < 1e-7 * std::abs(r_oracle));
  }
}

TEST_CASE("jpdf_contour_size_invariance_and_positivity") {
  LaguerreParams p(5, 2);
  std::vector<double> l = {0.7, 1.9};
  ContourPath small = contour_around_segment(0.6, 2.0, 0.7, 300);
  ContourPath big = contour_around_segment(0.6, 2.0, 2.2, 560);
  for (double tau : {0.6, -0.3}) {
    double a = jpdf_contour_eval(p, l, tau, small);
    double b = jpdf_contour_eval(p, l, tau, big);
    CHECK(a > 0.0);
    CHECK(std::abs(a - b) < 1e-9 * std::abs(a));
  }
}

TEST_CASE("jpdf_contour_preconditions") {
  LaguerreParams p(5, 2);
  ContourPath c = contour_around_segment(0.0, 3.0, 0.8, 200);
  CHECK_THROWS_AS(jpdf_contour_eval(p, {1.0, 2.0}, 0.0, c), std::invalid_argument);
  CHECK_THROWS_AS(jpdf_contour_eval(p, {-1.0, 2.0}, 0.5, c), std::invalid_argument);
  CHECK_THROWS_AS(jpdf_contour_eval(p, {1.5, 1.5}, 0.5, c), std::invalid_argument);
  CHECK_THROWS_AS(jpdf_contour_eval(p, {1.0, 2.0, 0.5}, 0.5, c), std::invalid_argument);
  // eigenvalue outside the contour
  CHECK_THROWS_AS(jpdf_contour_eval(p, {1.0, 5.0}, 0.5, c), std::invalid_argument);
}
