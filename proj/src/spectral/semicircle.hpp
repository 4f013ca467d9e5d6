#pragma once

#include <cstddef>
#include <vector>

namespace rml::spectral {

// Semicircle equilibrium measure on [-2, 2]: density (1/2pi) sqrt(4 - x^2).
double semicircle_cdf(double x);

// Smallest b with cdf(b) = q, q in (0, 1]; bisection on the closed-form CDF
// to 1e-12 absolute. Throws ParameterError outside (0, 1].
double semicircle_quantile(double q);

// gamma_j = quantile(j/n) for j = 1..n (classical eigenvalue locations).
std::vector<double> semicircle_quantiles(std::size_t n);

}  // namespace rml::spectral
