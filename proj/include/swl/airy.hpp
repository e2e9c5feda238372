#pragma once
#include <complex>

namespace swl {

using cplx = std::complex<double>;

// Airy function of the first kind and its derivative for complex argument.
// Compensated (double-double) Maclaurin series for |z| <= 8 keeps the heavy
// cancellation on the negative axis below 1e-13 relative; outside, the
// exponential asymptotic expansion is used, rotated through the connection
// formula when |arg z| > 2pi/3.
cplx airy_ai(cplx z);
cplx airy_ai_prime(cplx z);

double airy_ai(double x);
double airy_ai_prime(double x);

}  // namespace swl
