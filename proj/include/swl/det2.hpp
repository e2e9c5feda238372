#pragma once
#include <array>
#include <functional>

#include "swl/branch.hpp"
#include "swl/quad.hpp"

namespace swl {

// Result of the regularized 2-determinant evaluation.  `value` is the
// Carleman product prod_i (1 - mu_i) e^{mu_i} over the eigenvalues of the
// discretized operator; `trace_correction` is the exponent that reinstates
// the diagonal-block traces, so value * exp(trace_correction) is the plain
// determinant det(I - B) of the Nystrom matrix.  The regularized form keeps
// both factors finite even when the off-diagonal blocks are only
// Hilbert-Schmidt.
struct Det2Result {
  cplx value;
  int eigenvalues_used = 0;
  cplx trace_correction;
};

inline cplx det2_with_trace(const Det2Result& r) {
  return r.value * std::exp(r.trace_correction);
}

// Evaluator of the 2x2 matrix kernel at (x, y): returns {K11, K12, K21, K22}
// row-major.  For a scalar (1-block) operator only K11 is read.
using MatrixKernelFn = std::function<std::array<cplx, 4>(double, double)>;

// Nystrom evaluation of det_2(I - K) on [lower, infinity), truncated to the
// span of `grid` (the kernel must decay there; verified by tail sampling).
// The kernel is conjugated by diag(g, 1/g) before discretization, which
// rebalances the derivative and integral off-diagonal blocks without
// changing the determinant; pass an empty function for g == 1.
// A companion grid at half the panel order cross-checks the value (the
// returned value is the full-order one); disagreement above 1e-5 throws.
Det2Result det2_nystrom(const MatrixKernelFn& kernel, int n_blocks, double lower,
                        const QuadratureGrid& grid,
                        const std::function<double(double)>& balance);

}  // namespace swl
