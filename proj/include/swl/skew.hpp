#pragma once
#include <optional>
#include <vector>

#include "swl/laguerre.hpp"
#include "swl/quad.hpp"

namespace swl {

// Everything needed to evaluate the skew product <f,g>_1 with the complex
// weight w(x) = e^{-Mx/2} x^{(M-N-1)/2} (t-x)^{-1/2} on [0,L] (L either a
// truncation point z or an automatically chosen decay cutoff):
//  - w and the Laguerre family L_0..L_D cached at the grid nodes,
//  - panel-exact cumulative integrals of L_j w (the eps transform backbone),
//  - the Gram matrix gram[j][k] = <L_j, L_k>_1, antisymmetric by construction.
struct SkewWeightContext {
  LaguerreParams params;
  cplx t;
  QuadratureGrid grid;
  std::optional<double> z_truncation;
  int max_degree = 0;

  std::vector<cplx> w_nodes;
  std::vector<std::vector<double>> lag;        // lag[i][j] = L_j(x_i)
  std::vector<std::vector<cplx>> prefix;       // prefix[j][p] = int over panels < p of L_j w
  std::vector<cplx> full;                      // full[j] = int_0^L L_j w
  std::vector<std::vector<cplx>> eps_nodes;    // eps_nodes[i][j] = int_0^{x_i} L_j w
  std::vector<std::vector<cplx>> gram;
  std::vector<double> gl_x, gl_w;

  int panel_of(double x) const;
};

SkewWeightContext make_skew_context(const LaguerreParams& params, cplx t, int max_degree,
                                    std::optional<double> z_truncation = std::nullopt,
                                    int points_per_panel = 20);

// Decay cutoff used when no explicit truncation is given: beyond it the
// weighted integrands of every cached degree are below e^{-50} of their peak.
double truncation_point(const LaguerreParams& params, int max_degree);

cplx weight_w(const SkewWeightContext& ctx, double x);

// out[j] = int_0^x L_j w (panel-exact at arbitrary x inside the grid span)
void cumulative_lw(const SkewWeightContext& ctx, double x, std::vector<cplx>& out);

// out[j] = eps(L_j w)(x) = int_0^x L_j w - (1/2) int_0^L L_j w
void eps_lw(const SkewWeightContext& ctx, double x, std::vector<cplx>& out);

// <f,g>_2 = int f g w0, evaluated exactly through Laguerre orthogonality
cplx inner2(const MonicPolynomial& f, const MonicPolynomial& g, const LaguerreParams& params);

// <f,g>_1 by contraction against the cached Gram matrix
cplx skew_product(const SkewWeightContext& ctx, const MonicPolynomial& f,
                  const MonicPolynomial& g);

// Q_j(x) = d/dx(x^{j+1}(t-x)w) / w, a degree j+2 polynomial with leading
// coefficient M/2, expanded in the Laguerre basis
MonicPolynomial parts_polynomial(const SkewWeightContext& ctx, int j);

struct SkewPolynomialPair {
  MonicPolynomial pi_even;       // pi_{2k,1}
  MonicPolynomial pi_odd;        // pi_{2k+1,1}
  std::vector<cplx> gamma_coeffs;  // {gamma_{2k,1}, gamma_{2k+1,1}, gamma_{2k+1,2}}
  cplx h_odd_1;                  // <pi_{2k,1}, pi_{2k+1,1}>_1
};

// The degree-(2k, 2k+1) skew orthogonal pair; throws std::runtime_error when
// the <L_{2k-1},L_{2k-2}>_1 hypothesis degenerates.
SkewPolynomialPair skew_orthogonal_pair(const SkewWeightContext& ctx, int k);

}  // namespace swl
