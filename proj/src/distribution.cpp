#include "swl/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "swl/det2.hpp"
#include "swl/kernel.hpp"
#include "swl/skew.hpp"

namespace swl {

namespace {

double spike_exponent(const EnsembleParams& ens) {
  return ens.m_dof * ens.tau / (2.0 * (1.0 + ens.tau));
}

// Largest term magnitude alongside the sum: the normalization integral is a
// closed-contour integral of an e^{ct}-sized integrand whose value is set by
// the saddle near the spectrum, so the ratio result/max-term measures how
// much cancellation the quadrature had to survive.
struct ContourSum {
  cplx value;
  double max_term = 0.0;
};

ContourSum pfaffian_contour_sum(const EnsembleParams& ens, double z, const ContourPath& contour) {
  double c = spike_exponent(ens);
  ContourSum out;
  out.value = 0.0;
  for (std::size_t k = 0; k < contour.weights.size(); ++k) {
    cplx t = contour.points[k];
    cplx term = contour.weights[k] * std::exp(c * t) * pfaffian(moment_matrix(ens, z, t));
    out.max_term = std::max(out.max_term, std::abs(term));
    out.value += term;
  }
  return out;
}

// Per-point kernel caches keyed by the node coordinate's bit pattern; the
// doubled verification grid introduces new coordinates lazily.
struct PointCacheMap {
  const KernelContext& kc;
  std::unordered_map<std::uint64_t, KernelPointCache> map;

  const KernelPointCache& at(double x) {
    std::uint64_t key;
    std::memcpy(&key, &x, sizeof key);
    auto it = map.find(key);
    if (it == map.end()) it = map.emplace(key, kernel_point_cache(kc, x)).first;
    return it->second;
  }
};

QuadratureGrid det2_domain_grid(double z, int big_m, double domain_cap,
                                double x_spike, double spike_w) {
  // The kernel entries decay like e^{-M x} times algebraic factors; five
  // uniform panels spanning 40 decay lengths put the truncation error near
  // e^{-40} while the per-panel order stays moderate.  The cap keeps the
  // domain inside the range covered by the kernel tables.
  double upper = std::min(z + 40.0 / big_m, domain_cap);
  int base = 5;
  double wu = (upper - z) / base;
  std::vector<double> edges(base + 1);
  for (int i = 0; i <= base; ++i) edges[i] = z + wu * i;

  // When the integration point t sits close to the real axis with Re t inside
  // the domain, the (t - x)^{-1/2} weight factor concentrates the entries
  // over a width ~|Im t| around Re t.  A geometric panel ladder centered
  // there keeps the variation per panel uniformly bounded.
  if (x_spike > z && x_spike < upper) {
    double w0 = std::clamp(0.5 * spike_w, wu / 64.0, wu);
    std::vector<double> all(edges);
    all.push_back(x_spike);
    for (double p = x_spike, h = w0; h < wu; h *= 2.0) {
      p += h;
      if (p < upper - 0.25 * w0) all.push_back(p);
    }
    for (double p = x_spike, h = w0; h < wu; h *= 2.0) {
      p -= h;
      if (p > z + 0.25 * w0) all.push_back(p);
    }
    std::sort(all.begin(), all.end());
    edges.assign(1, all.front());
    for (std::size_t i = 1; i + 1 < all.size(); ++i)
      if (all[i] - edges.back() > 0.35 * w0) edges.push_back(all[i]);
    edges.push_back(all.back());
  }
  return composite_grid(12, edges);
}

// Basis for the pairing matrix: unit monic polynomials through degree N-3,
// topped by the degree-(N-2, N-1) skew-orthogonal pair built on the full
// weight.  Any monic family gives the same Pfaffian; a truncation-independent
// basis avoids rebuilding the pair per threshold, and the skew-orthogonal top
// makes the untruncated matrix block-sparse.
std::vector<MonicPolynomial> pairing_basis(const SkewWeightContext& full) {
  int n = full.params.big_n;
  MonicPolynomial pi_even, pi_odd;
  if (n == 2) {
    pi_even = MonicPolynomial({cplx(1.0)});
    pi_odd = MonicPolynomial({cplx(0.0), cplx(1.0)});
  } else {
    SkewPolynomialPair pair = skew_orthogonal_pair(full, (n - 2) / 2);
    pi_even = std::move(pair.pi_even);
    pi_odd = std::move(pair.pi_odd);
  }
  std::vector<MonicPolynomial> r(n);
  for (int j = 0; j < n - 2; ++j) {
    std::vector<cplx> e(j + 1, cplx(0.0));
    e[j] = 1.0;
    r[j] = MonicPolynomial(std::move(e));
  }
  r[n - 2] = std::move(pi_even);
  r[n - 1] = std::move(pi_odd);
  return r;
}

// sgn-kernel double integrals m_jk = -2 <r_j, r_k>_1 over the context's
// domain; this normalization makes Pf(m) the plain ordered integral, and the
// z-independent (-2)^{N/2} surplus cancels in CDF ratios.
CMatrix pairing_matrix(const SkewWeightContext& ctx, const std::vector<MonicPolynomial>& r) {
  int n = static_cast<int>(r.size());
  CMatrix m(n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      cplx v = -2.0 * skew_product(ctx, r[j], r[k]);
      m(j, k) = v;
      m(k, j) = -v;
    }
  }
  return m;
}

ContourSum fredholm_contour_sum(const EnsembleParams& ens, double z, const ContourPath& contour) {
  LaguerreParams params(ens.m_dof, ens.n_dim);
  double c = spike_exponent(ens);
  std::size_t nn = contour.weights.size();
  auto balance = [](double xi) { return std::sqrt(1.0 + xi * xi); };

  std::vector<cplx> dd(nn), d2(nn);
  for (std::size_t k = 0; k < nn; ++k) {
    cplx t = contour.points[k];
    KernelContext kc = make_kernel_context(params, t);
    dd[k] = determinant(pairing_matrix(kc.skew, pairing_basis(kc.skew)));
    QuadratureGrid grid =
        det2_domain_grid(z, ens.m_dof, kc.skew.grid.b, t.real(), std::abs(t.imag()));
    double upper = grid.b;
    PointCacheMap caches{kc, {}};

    // The raw 21 entry carries an antisymmetric step across the diagonal,
    // which a Gauss-Legendre product rule integrates poorly.  The step block
    // E is nilpotent (it maps the first component into the second and
    // nothing back), so det(I - K) = det(I - K_s - K_s E) exactly, where K_s
    // is the kernel with the step stripped; the composition K_s E collapses
    // to boundary couplings at the two ends of the integration domain.  The
    // composed kernel is smooth across the diagonal:
    //   C11(x, .) = (S(x, upper) + S(x, z)) / 2
    //   C12      = K12
    //   C21(x,y) = IS(x,y) + IS(y,x) - (IS(upper, x) + IS(z, x)) / 2
    //   C22      = K22
    // with IS the smooth part of the 21 entry.  IS(x,y) + IS(y,x) equals the
    // sum of the raw entries because the steps cancel in the symmetric sum.
    struct EdgeVals {
      cplx s1_sum, is1_sum;
    };
    std::unordered_map<std::uint64_t, EdgeVals> edge_map;
    const KernelPointCache& cz = caches.at(z);
    const KernelPointCache& cu = caches.at(upper);
    auto edge_at = [&](double x, const KernelPointCache& cx) -> const EdgeVals& {
      std::uint64_t key;
      std::memcpy(&key, &x, sizeof key);
      auto it = edge_map.find(key);
      if (it == edge_map.end()) {
        EdgeVals v;
        v.s1_sum = 0.5 * (kernel_S1_cached(kc, cx, cu) + kernel_S1_cached(kc, cx, cz));
        cplx is1_ux = matrix_kernel_cached(kc, cu, cx)[2] + 0.5;
        cplx is1_zx = matrix_kernel_cached(kc, cz, cx)[2] - 0.5;
        v.is1_sum = 0.5 * (is1_ux + is1_zx);
        it = edge_map.emplace(key, v).first;
      }
      return it->second;
    };
    MatrixKernelFn fn = [&](double x, double y) {
      const KernelPointCache& ax = caches.at(x);
      const KernelPointCache& ay = caches.at(y);
      std::array<cplx, 4> kxy = matrix_kernel_cached(kc, ax, ay);
      std::array<cplx, 4> kyx = matrix_kernel_cached(kc, ay, ax);
      const EdgeVals& ev = edge_at(x, ax);
      return std::array<cplx, 4>{ev.s1_sum, kxy[1], kxy[2] + kyx[2] - ev.is1_sum, kxy[3]};
    };
    d2[k] = det2_with_trace(det2_nystrom(fn, 2, z, grid, balance));
  }

  // Reference determinant at the contour's exact leftmost point c0 (real and
  // negative, safely off the weight's support).  Dividing by det D(c0), which
  // depends only on the ensemble and the margin, gives the z run and the
  // normalization run identical prefactors that cancel in the CDF ratio.
  cplx c0(contour.x_left, 0.0);
  SkewWeightContext full0 = make_skew_context(params, c0, ens.n_dim + 1);
  cplx dd0 = determinant(pairing_matrix(full0, pairing_basis(full0)));

  std::size_t i_top = 0, i_left = 0;
  for (std::size_t k = 1; k < nn; ++k) {
    if (contour.points[k].imag() > contour.points[i_top].imag()) i_top = k;
    if (contour.points[k].real() < contour.points[i_left].real()) i_left = k;
  }

  // sqrt(det D(t)/det D(c0) * det2(t)) by continuity around the ring, seeded
  // principal at the top node.  The product under the root is proportional to
  // the determinant of the truncated pairing matrix, whose winding around a
  // closed contour is even (it is a perfect square of a single-valued
  // function), so the tracked root closes up; a phase jump beyond pi/2
  // between neighbors means the node spacing cannot support the tracking.
  std::vector<cplx> s(nn);
  auto rooted = [&](std::size_t k) { return dd[k] / dd0 * d2[k]; };
  s[i_top] = std::sqrt(rooted(i_top));
  for (std::size_t step = 1; step < nn; ++step) {
    std::size_t j = (i_top + step) % nn;
    std::size_t p = (j + nn - 1) % nn;
    cplx sp = std::sqrt(rooted(j));
    if (std::abs(sp - s[p]) > std::abs(sp + s[p])) sp = -sp;
    if (std::abs(std::arg(sp / s[p])) > 0.5 * M_PI)
      throw std::runtime_error(
          "lmax_cdf_fredholm: branch tracking failure (square-root phase jump exceeds pi/2)");
    s[j] = sp;
  }

  // Continuity fixes the root only up to a global sign, and the principal
  // seed may resolve it differently at different thresholds.  Anchor it where
  // the value is known: at the leftmost node t sits just off the negative
  // real axis, every weight factor (t-x)^{-1/2} is purely imaginary, and the
  // ordered-integral value of the root is i^N times a positive number, i.e.
  // real of sign (-1)^(N/2).  The same anchor in the numerator and
  // normalization runs makes their signs cancel.
  double anchor_sign = ens.n_dim % 4 == 0 ? 1.0 : -1.0;
  if (s[i_left].real() * anchor_sign < 0.0)
    for (auto& v : s) v = -v;

  ContourSum out;
  out.value = 0.0;
  for (std::size_t k = 0; k < nn; ++k) {
    cplx term = contour.weights[k] * std::exp(c * contour.points[k]) * s[k];
    out.max_term = std::max(out.max_term, std::abs(term));
    out.value += term;
  }
  return out;
}

// The normalization integral depends on the ensemble, contour geometry, and
// route only, so it is shared across thresholds.
struct NormKey {
  int m, n, route;
  double tau, margin;
  std::size_t nodes;
  bool operator<(const NormKey& o) const {
    return std::tie(m, n, route, tau, margin, nodes) <
           std::tie(o.m, o.n, o.route, o.tau, o.margin, o.nodes);
  }
};

cplx normalization_integral(const EnsembleParams& ens, double margin, std::size_t n_nodes,
                            int route) {
  static std::map<NormKey, cplx> cache;
  static std::mutex mtx;
  NormKey key{ens.m_dof, ens.n_dim, route, ens.tau, margin, n_nodes};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  double z_ref = normalization_threshold(ens);
  ContourPath ref = contour_around_segment(0.0, z_ref, margin, static_cast<int>(n_nodes));
  ContourSum sum = route == 0 ? pfaffian_contour_sum(ens, z_ref, ref)
                              : fredholm_contour_sum(ens, z_ref, ref);
  if (std::abs(sum.value) < 1e-12 * sum.max_term)
    throw std::runtime_error(
        "largest-eigenvalue CDF: normalization integral lost to cancellation");
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(key, sum.value);
  return sum.value;
}

double finalize_cdf_ratio(cplx ratio, const char* route) {
  auto described = [&](const char* what) {
    return std::string(route) + ": CDF ratio " + what + " (" + std::to_string(ratio.real()) +
           (ratio.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(ratio.imag())) + "i)";
  };
  if (!(std::abs(ratio.imag()) <= 1e-6 * (1.0 + std::abs(ratio.real()))))
    throw std::runtime_error(described("has a nonreal part"));
  double v = ratio.real();
  if (v < -1e-6 || v > 1.0 + 1e-6)
    throw std::runtime_error(described("outside [0,1] beyond tolerance"));
  return std::clamp(v, 0.0, 1.0);
}

void validate_request(const CdfRequest& req, bool need_tau) {
  if (need_tau && req.ens.tau == 0.0)
    throw std::invalid_argument("largest-eigenvalue CDF: tau must be nonzero");
  if (!(req.z <= req.normalization_z))
    throw std::invalid_argument("largest-eigenvalue CDF: z must not exceed normalization_z");
  if (req.z > 0.0) {
    if (req.contour.weights.empty())
      throw std::invalid_argument("largest-eigenvalue CDF: empty contour");
    if (!(req.contour.x_right > req.z) || !(req.contour.x_left < 0.0))
      throw std::invalid_argument("largest-eigenvalue CDF: contour does not enclose [0, z]");
  }
}

}  // namespace

double normalization_threshold(const EnsembleParams& ens) {
  double gamma = ens.gamma();
  double edge = mp_edge_upper(gamma);
  double edge_sd = std::pow(1.0 + gamma, 4.0 / 3.0) /
                   (gamma * std::pow(static_cast<double>(ens.m_dof), 2.0 / 3.0));
  double z_ref = edge + 9.0 * edge_sd;
  if (ens.tau * gamma > 1.0) {
    ScaledCoordinates sc = scaled_coordinates(ens, edge);
    z_ref = std::max(z_ref, sc.super_center + 9.0 * sc.super_scale);
  }
  return z_ref;
}

CdfRequest make_cdf_request(const EnsembleParams& ens, double z, double margin,
                            int contour_nodes) {
  if (z < 0.0) throw std::invalid_argument("make_cdf_request: z must be nonnegative");
  CdfRequest req{z, ens, {}, 0.0};
  req.normalization_z = normalization_threshold(ens);
  if (!(z <= req.normalization_z))
    throw std::invalid_argument("make_cdf_request: z beyond the normalization threshold");
  // The contour only matters for z > 0 (the CDF is identically 0 otherwise),
  // but a degenerate segment would not build, so give it a minimal width.
  req.contour = contour_around_segment(0.0, std::max(z, 1e-6), margin, contour_nodes);
  return req;
}

CMatrix moment_matrix(const EnsembleParams& ens, double z, cplx t) {
  LaguerreParams params(ens.m_dof, ens.n_dim);
  int n = ens.n_dim;
  SkewWeightContext full = make_skew_context(params, t, n + 1);
  std::vector<MonicPolynomial> r = pairing_basis(full);

  // Truncated products over [0, z] x [0, z]; z at or past the decay cutoff
  // is the untruncated matrix.
  std::optional<double> zt(z);
  if (z >= truncation_point(params, n - 1)) zt.reset();
  SkewWeightContext trunc = make_skew_context(params, t, n - 1, zt);
  return pairing_matrix(trunc, r);
}

double lmax_cdf_pfaffian(const CdfRequest& req) {
  validate_request(req, true);
  if (req.z <= 0.0) return 0.0;
  ContourSum f = pfaffian_contour_sum(req.ens, req.z, req.contour);
  cplx f_ref =
      normalization_integral(req.ens, -req.contour.x_left, req.contour.weights.size(), 0);
  return finalize_cdf_ratio(f.value / f_ref, "lmax_cdf_pfaffian");
}

double lmax_cdf_fredholm(const CdfRequest& req) {
  validate_request(req, false);
  if (req.z <= 0.0) return 0.0;
  ContourSum f = fredholm_contour_sum(req.ens, req.z, req.contour);
  cplx f_ref =
      normalization_integral(req.ens, -req.contour.x_left, req.contour.weights.size(), 1);
  return finalize_cdf_ratio(f.value / f_ref, "lmax_cdf_fredholm");
}

}  // namespace swl
