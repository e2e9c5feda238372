#include "swl/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swl/ensemble.hpp"
#include "swl/quad.hpp"

namespace swl {

double EmpiricalCDF::operator()(double x) const {
  auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), x);
  return static_cast<double>(it - sorted_samples.begin()) / count;
}

EmpiricalCDF empirical_cdf(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_cdf: no samples");
  std::sort(samples.begin(), samples.end());
  int n = static_cast<int>(samples.size());
  return EmpiricalCDF{std::move(samples), n};
}

double ks_distance(const EmpiricalCDF& e, const std::function<double(double)>& ref) {
  double d = 0.0;
  for (int i = 0; i < e.count; ++i) {
    double x = e.sorted_samples[i];
    // right-continuous value at x; ties share the highest index
    double femp = e(x);
    d = std::max(d, std::abs(femp - ref(x)));
  }
  return d;
}

double mp_density(double lambda, double gamma) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("mp_density: gamma must be >= 1");
  double bm = mp_edge_lower(gamma), bp = mp_edge_upper(gamma);
  if (lambda <= bm || lambda >= bp) return 0.0;
  return gamma * gamma / (2.0 * M_PI * lambda) * std::sqrt((lambda - bm) * (bp - lambda));
}

double mp_cdf(double x, double gamma) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("mp_cdf: gamma must be >= 1");
  double bm = mp_edge_lower(gamma), bp = mp_edge_upper(gamma);
  if (x <= bm) return 0.0;
  if (x >= bp) x = bp;
  double u_hi = std::asin(std::sqrt((x - bm) / (bp - bm)));
  std::vector<double> gx, gw;
  gauss_legendre_raw(120, gx, gw);
  double acc = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    double u = 0.5 * u_hi * (gx[i] + 1.0);
    double lam = bm + (bp - bm) * std::sin(u) * std::sin(u);
    // dlambda = (b_+ - b_-) sin(2u) du; the jacobian cancels the edge roots
    acc += gw[i] * mp_density(lam, gamma) * (bp - bm) * std::sin(2.0 * u);
  }
  return 0.5 * u_hi * acc;
}

}  // namespace swl
