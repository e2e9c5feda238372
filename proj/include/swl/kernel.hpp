#pragma once
#include <array>
#include <optional>
#include <vector>

#include "swl/skew.hpp"

namespace swl {

// Exact finite-N kernel machinery for the largest-eigenvalue law: the
// Christoffel-Darboux kernel K2 of the Laguerre family, the rank-two
// correction K1 carrying the spike coupling, their sum S1, the 2x2 matrix
// kernel entering the regularized Fredholm determinant, and the logarithmic
// t-derivative of the skew moment determinant.
//
// K1 is assembled from five separable products
//   K1(x,y) = sum_m coef_m * eps(L_{e_m} w)(y) * L_{p_m}(x) w(x)
// with degrees e_m in {N-2,...,N+1} and p_m in {N-2,N-1}; the coefficient
// table is fixed at construction from the four skew scalars below.
struct KernelContext {
  SkewWeightContext skew;
  std::vector<double> h;      // h_{j,0} for j = 0..N+1
  std::vector<double> log_h;  // log h_{j,0}

  // <L_N,L_{N-2}>_1, <L_{N-1},L_{N-2}>_1, <L_{N+1},L_{N-1}>_1, <L_{N+1},L_{N-2}>_1
  cplx s_n_nm2, s_nm1_nm2, s_np1_nm1, s_np1_nm2;

  std::array<int, 5> term_eps{};
  std::array<int, 5> term_poly{};
  std::array<cplx, 5> term_coef{};

  int n() const { return skew.params.big_n; }
  cplx t() const { return skew.t; }
};

// Builds the weight context at degree N+1 and freezes the K1 coefficient
// table.  The two degree-shift identities tying <L_{N+1},.>_1 products to
// <L_N,L_{N-2}>_1 are asserted here (they are exact consequences of the
// recurrence, so failure means the quadrature backbone is broken).
KernelContext make_kernel_context(const LaguerreParams& params, cplx t,
                                  std::optional<double> z_truncation = std::nullopt,
                                  int points_per_panel = 20);

// Generic sampled eps transform: fw_samples holds f(x_i) w(x_i) at the grid
// nodes; returns (1/2) int sgn(y - s) f(s) w(s) ds via panel prefix sums, the
// cut panel integrated through the barycentric interpolant of its samples.
// Throws std::out_of_range when y lies outside the grid span.  Production
// kernel paths use the exact polynomial tables; this is the sampled-data
// entry point.
cplx epsilon_transform(const SkewWeightContext& ctx, const std::vector<cplx>& fw_samples,
                       double y);

// Per-point tables shared by all kernel entries: Laguerre values and first
// derivatives through degree N+1, the weight and its derivative, the eps
// transforms and cumulative integrals of L_j w.
struct KernelPointCache {
  double x = 0;
  cplx w, dw;
  std::vector<double> lag, dlag;
  std::vector<cplx> eps, cum;
};

KernelPointCache kernel_point_cache(const KernelContext& kc, double x);

// K2(x,y) = (y(t-y)/(x(t-x)))^{1/2} w0(x)^{1/2} w0(y)^{1/2}
//           * (L_N(x)L_{N-1}(y) - L_N(y)L_{N-1}(x)) / (h_{N-1,0}(x-y)),
// evaluated as w(x)w(y) y(t-y) times the divided difference (the two
// groupings agree factorwise for the principal branch).  Near-diagonal
// points switch to the Taylor expansion of the divided difference.
cplx kernel_K2(const KernelContext& kc, double x, double y);
cplx kernel_K2_cached(const KernelContext& kc, const KernelPointCache& a,
                      const KernelPointCache& b);

cplx kernel_K1(const KernelContext& kc, double x, double y);
cplx kernel_K1_cached(const KernelContext& kc, const KernelPointCache& a,
                      const KernelPointCache& b);

cplx kernel_S1(const KernelContext& kc, double x, double y);
cplx kernel_S1_cached(const KernelContext& kc, const KernelPointCache& a,
                      const KernelPointCache& b);

// Row-major 2x2 matrix kernel
//   [ S1(x,y)              -d/dy S1(x,y) ]
//   [ IS1(x,y) - sgn(x-y)/2   S1(y,x)    ]
// with IS1(x,y) = -int_x^y S1(u,y) du evaluated exactly from the cumulative
// tables, and the 12 entry from the analytic derivative of the recurrence.
std::array<cplx, 4> matrix_kernel(const KernelContext& kc, double x, double y);
std::array<cplx, 4> matrix_kernel_cached(const KernelContext& kc, const KernelPointCache& a,
                                         const KernelPointCache& b);

// d/dt log det D = -int_0^inf S1(x,x)/(t-x) dx over the context grid.
// The t argument must match the context's t (the kernel tables depend on it).
cplx logderiv_detD(const KernelContext& kc, cplx t);

}  // namespace swl
