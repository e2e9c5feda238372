#include "swl/pfaffian.hpp"

#include <cmath>
#include <stdexcept>

namespace swl {

cplx pfaffian(CMatrix A) {
  int n = A.n;
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (n == 0) return 1.0;

  double scale = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(A(i, j)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (std::abs(A(i, j) + A(j, i)) > 1e-12 * std::max(scale, 1.0))
        throw std::invalid_argument("pfaffian: matrix not antisymmetric");

  cplx pf = 1.0;
  for (int k = 0; k < n - 1; k += 2) {
    // pivot: largest |A(i,k)| for i > k
    int piv = k + 1;
    double best = std::abs(A(k + 1, k));
    for (int i = k + 2; i < n; ++i)
      if (std::abs(A(i, k)) > best) { best = std::abs(A(i, k)); piv = i; }
    if (best == 0.0) return 0.0;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(A(k + 1, j), A(piv, j));
      for (int i = 0; i < n; ++i) std::swap(A(i, k + 1), A(i, piv));
      pf = -pf;
    }
    cplx akk1 = A(k, k + 1);
    pf *= akk1;
    if (k + 2 < n) {
      // zero column k below row k+1 with a unit congruence transform; the
      // Pfaffian recursion then discards rows/cols k and k+1 entirely
      for (int i = k + 2; i < n; ++i) {
        cplx f = A(i, k) / A(k + 1, k);
        if (f == cplx(0.0)) continue;
        for (int j = 0; j < n; ++j) A(i, j) -= f * A(k + 1, j);
        for (int j = 0; j < n; ++j) A(j, i) -= f * A(j, k + 1);
      }
    }
  }
  return pf;
}

cplx determinant(CMatrix A) {
  int n = A.n;
  cplx det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(A(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A(i, k)) > best) { best = std::abs(A(i, k)); piv = i; }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      det = -det;
    }
    det *= A(k, k);
    for (int i = k + 1; i < n; ++i) {
      cplx f = A(i, k) / A(k, k);
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return det;
}

}  // namespace swl
