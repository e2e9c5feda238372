#pragma once
#include <complex>
#include <stdexcept>

namespace swl {

using cplx = std::complex<double>;

// (t - x)^{-1/2} with the branch cut along arg(t-x) = pi, i.e. the principal
// square root. Positive real when t - x is positive real, continuous
// everywhere off the cut, and conjugate-symmetric in t.
inline cplx branch_sqrt_inv(cplx t, cplx x) {
  cplx d = t - x;
  if (d == cplx(0.0, 0.0)) throw std::domain_error("branch_sqrt_inv: t == x");
  return 1.0 / std::sqrt(d);
}

inline cplx branch_sqrt(cplx t, cplx x) {
  return std::sqrt(t - x);
}

}  // namespace swl
