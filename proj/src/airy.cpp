#include "swl/airy.hpp"

#include <cmath>

namespace swl {
namespace {

// Minimal double-double arithmetic, enough for the Airy series.
struct dd {
  double hi, lo;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline dd dd_sub(dd a, dd b) { return dd_add(a, {-b.hi, -b.lo}); }

inline dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul_d(dd a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

// division by an exactly representable double (integer products here); a
// rounded-reciprocal multiply would seed every series term with 1e-16 noise,
// which the exponential cancellation then amplifies
inline dd dd_div_d(dd a, double b) {
  double q1 = a.hi / b;
  dd p = two_prod(q1, b);
  double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return quick_two_sum(q1, q2);
}

struct cdd {
  dd re, im;
};

inline cdd cdd_from(cplx z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline cdd cdd_add(cdd a, cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline cdd cdd_mul(cdd a, cdd b) {
  dd re = dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
  dd im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
  return {re, im};
}

inline cdd cdd_mul_d(cdd a, double b) { return {dd_mul_d(a.re, b), dd_mul_d(a.im, b)}; }

inline cdd cdd_div_d(cdd a, double b) { return {dd_div_d(a.re, b), dd_div_d(a.im, b)}; }

inline cplx cdd_to(cdd a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

inline double cdd_abs(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

// Ai(0) and -Ai'(0) to double-double accuracy.
const dd kC1 = {3.55028053887817219e-01, 2.05233632436211994e-17};
const dd kC2 = {2.58819403792806824e-01, -2.52224311161083207e-17};

// Maclaurin series in double-double; valid everywhere, used for |z| <= 8.
void airy_series(cplx z, cplx& ai, cplx& aip) {
  if (z == cplx(0.0)) {
    ai = cplx(kC1.hi + kC1.lo);
    aip = cplx(-(kC2.hi + kC2.lo));
    return;
  }
  cdd z3 = cdd_mul(cdd_mul(cdd_from(z), cdd_from(z)), cdd_from(z));
  cdd z2 = cdd_mul(cdd_from(z), cdd_from(z));

  // f = sum a_k z^{3k},   a ratio: z^3 /((3k+2)(3k+3))
  // g = sum b_k z^{3k+1}, b ratio: z^3 /((3k+3)(3k+4))
  // f' = sum u_k, u_1 = z^2/2, ratio: z^3 (k+1)/(k(3k+2)(3k+3))
  // g' = sum v_k, v_0 = 1,     ratio: z^3 /((3k+1)(3k+3))
  cdd a = {{1.0, 0.0}, {0.0, 0.0}};
  cdd b = cdd_from(z);
  cdd u = cdd_mul_d(z2, 0.5);
  cdd v = {{1.0, 0.0}, {0.0, 0.0}};
  cdd f = a, g = b, fp = u, gp = v;

  for (int k = 0; k < 400; ++k) {
    a = cdd_div_d(cdd_mul(a, z3), (3.0 * k + 2.0) * (3.0 * k + 3.0));
    b = cdd_div_d(cdd_mul(b, z3), (3.0 * k + 3.0) * (3.0 * k + 4.0));
    u = cdd_div_d(cdd_mul_d(cdd_mul(u, z3), k + 2.0),
                  (k + 1.0) * (3.0 * k + 5.0) * (3.0 * k + 6.0));
    v = cdd_div_d(cdd_mul(v, z3), (3.0 * k + 1.0) * (3.0 * k + 3.0));
    f = cdd_add(f, a);
    g = cdd_add(g, b);
    fp = cdd_add(fp, u);
    gp = cdd_add(gp, v);
    double m = std::max(std::max(cdd_abs(a), cdd_abs(b)), std::max(cdd_abs(u), cdd_abs(v)));
    if (m < 1e-40 * (1.0 + cdd_abs(f))) break;
  }
  cdd aidd = cdd_add(cdd_mul_d(f, kC1.hi), cdd_mul_d(g, -kC2.hi));
  aidd = cdd_add(aidd, cdd_add(cdd_mul_d(f, kC1.lo), cdd_mul_d(g, -kC2.lo)));
  cdd aipdd = cdd_add(cdd_mul_d(fp, kC1.hi), cdd_mul_d(gp, -kC2.hi));
  aipdd = cdd_add(aipdd, cdd_add(cdd_mul_d(fp, kC1.lo), cdd_mul_d(gp, -kC2.lo)));
  ai = cdd_to(aidd);
  aip = cdd_to(aipdd);
}

// Asymptotic expansion for |arg z| <= 2pi/3 + eps, |z| >= 8.
void airy_asymptotic(cplx z, cplx& ai, cplx& aip) {
  cplx zq = std::pow(z, 0.25);
  cplx zeta = (2.0 / 3.0) * zq * zq * zq * zq * zq * zq;  // (2/3) z^{3/2}
  cplx izeta = 1.0 / zeta;
  cplx sa = 1.0, sb = 1.0;
  double uk = 1.0;
  cplx zpow = 1.0;
  double prev = 1e300;
  for (int k = 0; k < 60; ++k) {
    double un = uk * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0));
    double vn = -un * (6.0 * k + 7.0) / (6.0 * k + 5.0);
    zpow *= -izeta;
    double mag = un * std::abs(zpow);
    if (mag > prev) break;  // smallest term reached
    prev = mag;
    sa += un * zpow;
    sb += vn * zpow;
    uk = un;
    if (mag < 1e-18) break;
  }
  double spi = 0.5 / std::sqrt(M_PI);
  cplx e = std::exp(-zeta);
  ai = spi * e / zq * sa;
  aip = -spi * e * zq * sb;
}

void airy_impl(cplx z, cplx& ai, cplx& aip) {
  double r = std::abs(z);
  if (r <= 8.0) {
    airy_series(z, ai, aip);
    return;
  }
  double az = std::arg(z);
  if (std::abs(az) <= 2.0 * M_PI / 3.0) {
    airy_asymptotic(z, ai, aip);
    return;
  }
  // connection formula: Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z), w = e^{2pi i/3};
  // both rotated arguments land in the asymptotic sector
  cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
  cplx w2 = std::polar(1.0, -2.0 * M_PI / 3.0);
  cplx a1, a1p, a2, a2p;
  airy_asymptotic(w * z, a1, a1p);
  airy_asymptotic(w2 * z, a2, a2p);
  ai = -w * a1 - w2 * a2;
  aip = -(w * w) * a1p - (w2 * w2) * a2p;
}

}  // namespace

cplx airy_ai(cplx z) {
  cplx ai, aip;
  airy_impl(z, ai, aip);
  return ai;
}

cplx airy_ai_prime(cplx z) {
  cplx ai, aip;
  airy_impl(z, ai, aip);
  return aip;
}

double airy_ai(double x) { return airy_ai(cplx(x, 0.0)).real(); }

double airy_ai_prime(double x) { return airy_ai_prime(cplx(x, 0.0)).real(); }

}  // namespace swl
