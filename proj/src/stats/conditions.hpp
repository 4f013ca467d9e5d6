#pragma once

#include <vector>

#include "spectral/spectral.hpp"

namespace rml::stats {

// Gap-dominance condition: lambda_{n-1} - lambda_{n-2} >= p (lambda_n -
// lambda_{n-1}), membership in G_{n,p}. Requires 0 < p < 1/3.
bool condition1(const spectral::SpectralData& sd, double p);

struct Condition2Result {
  bool beta_upper = false;   // (i)   beta_j <= n^{-1/2+s/2} for all j
  bool beta_lower = false;   // (ii)  n^{-1/2-s/2} <= beta_j, j = n, n-1
  bool edge_gaps = false;    // (iii) n^{-2/3-s} <= l_n - l_j <= n^{-2/3+s}
  bool rigidity = false;     // (iv)  |l_j - gamma_j| <= n^{-2/3+s} min(j, n-j+1)^{-1/3}
  bool all() const { return beta_upper && beta_lower && edge_gaps && rigidity; }
};

// Membership in R_{n,s} with the per-clause breakdown. gamma must hold the
// semicircle quantiles gamma_j = quantile(j/n) for this n (precompute once
// per n with spectral::semicircle_quantiles).
Condition2Result condition2(const spectral::SpectralData& sd, double s,
                            double b_v, const std::vector<double>& gamma);
Condition2Result condition2(const spectral::SpectralData& sd, double s,
                            double b_v);

// Empirical P(G_{n,p}^c) over a fixed sample set for each p in p_grid.
// G_{n,p} is monotone in p, so evaluating one sample set across the grid
// gives exactly monotone complement probabilities.
std::vector<double> condition1_complement_probabilities(
    const std::vector<spectral::SpectralData>& samples,
    const std::vector<double>& p_grid);

}  // namespace rml::stats
