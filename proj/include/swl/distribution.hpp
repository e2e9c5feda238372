#pragma once
#include "swl/contour.hpp"
#include "swl/ensemble.hpp"
#include "swl/pfaffian.hpp"

namespace swl {

// One largest-eigenvalue CDF evaluation: the threshold z, the ensemble, a
// counter-clockwise contour enclosing [0, z] (crossing the positive axis to
// the right of z), and the reference threshold where the CDF is 1 to within
// the weight-tail error.  Both CDF routes return the ratio F(z) / F(z_ref),
// so none of the closed-form normalization constants are ever computed.
struct CdfRequest {
  double z = 0.0;
  EnsembleParams ens;
  ContourPath contour;
  double normalization_z = 0.0;
};

// Reference threshold: the right end of the spectrum (bulk edge, or the
// outlier location when the spike decouples) plus enough fluctuation scales
// that the missing tail mass is below 1e-7.  Pushing it much further is
// counterproductive: the contour factor e^{ct} grows with the enclosed
// interval and amplifies cancellation in the normalization integral.
double normalization_threshold(const EnsembleParams& ens);

// Builds the contour around [0, z] and fills in the normalization threshold.
CdfRequest make_cdf_request(const EnsembleParams& ens, double z, double margin = 1.0,
                            int contour_nodes = 256);

// The N x N antisymmetric moment matrix at contour point t with every
// integral truncated to [0, z]: rows 0..N-3 are the monic Laguerre
// polynomials, the top two rows the skew-orthogonal pair built on the full
// (untruncated) weight.  Entries are the sgn-kernel double integrals
//   m_jk = int int sgn(y - x) r_j(x) r_k(y) w(x) w(y) dx dy,
// i.e. -2 <r_j, r_k>_1, which makes Pf(m) equal to the plain ordered
// integral of |Delta| prod w over 0 <= l_1 <= ... <= l_N <= z; the constant
// (-2)^{N/2} is z-independent and cancels in CDF ratios.  z at or beyond the
// weight's decay cutoff yields the untruncated matrix.
CMatrix moment_matrix(const EnsembleParams& ens, double z, cplx t);

// P(lmax <= z) via contour quadrature of e^{M tau t / (2(1+tau))} Pf(m(t,z)),
// normalized by the same integral at normalization_z.
double lmax_cdf_pfaffian(const CdfRequest& req);

// The same probability via the regularized Fredholm determinant route: per
// contour node the integrand is sqrt(det D(t)/det D(c0) * det2(I - chi K chi))
// with det D the full-weight pairing determinant, c0 = (x_left, 0) the
// contour's leftmost point (the reference prefactor cancels in the CDF ratio
// because both runs share the margin), and the square root tracked by
// continuity around the ring with its global sign anchored near the negative
// real axis, where the value is real of sign (-1)^(N/2).
double lmax_cdf_fredholm(const CdfRequest& req);

}  // namespace swl
