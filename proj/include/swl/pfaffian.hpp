#pragma once
#include <complex>
#include <vector>

namespace swl {

using cplx = std::complex<double>;

// Dense column-major complex matrix just large enough for the moment-matrix
// work in this project.
struct CMatrix {
  int n = 0;
  std::vector<cplx> a;
  CMatrix() = default;
  explicit CMatrix(int n_) : n(n_), a((std::size_t)n_ * n_, cplx(0.0)) {}
  cplx& operator()(int i, int j) { return a[(std::size_t)j * n + i]; }
  const cplx& operator()(int i, int j) const { return a[(std::size_t)j * n + i]; }
};

// Pfaffian of an even-dimensional antisymmetric matrix via skew-symmetric
// elimination (Parlett-Reid) with partial pivoting.  Sign convention:
// Pf([[0,a],[-a,0]]) = a.  Throws on odd dimension or if the antisymmetry
// residual exceeds 1e-12 relative to the largest entry.
cplx pfaffian(CMatrix A);

// Determinant by LU with partial pivoting (used as a Pfaffian oracle).
cplx determinant(CMatrix A);

}  // namespace swl
