#pragma once
#include <functional>
#include <vector>

namespace swl {

struct EmpiricalCDF {
  std::vector<double> sorted_samples;
  int count = 0;

  // fraction of samples <= x (right-continuous step function)
  double operator()(double x) const;
};

EmpiricalCDF empirical_cdf(std::vector<double> samples);

// sup |F_emp(x_i) - ref(x_i)| over the sample points, with F_emp evaluated
// right-continuously, so an ECDF is at distance zero from its own steps.
double ks_distance(const EmpiricalCDF& e, const std::function<double(double)>& ref);

// Marchenko-Pastur density gamma^2/(2 pi lambda) sqrt((lambda-b_-)(b_+-lambda))
// on [b_-, b_+], b_pm = (1 pm gamma^{-1})^2; zero outside.  Requires gamma >= 1.
double mp_density(double lambda, double gamma);

// int_{b_-}^{x} of mp_density, by quadrature under the substitution
// lambda = b_- + (b_+ - b_-) sin^2 u, which absorbs both edge singularities.
double mp_cdf(double x, double gamma);

}  // namespace swl
