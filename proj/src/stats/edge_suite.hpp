#pragma once

#include <array>
#include <vector>

#include "spectral/spectral.hpp"
#include "stats/empirical.hpp"

namespace rml::stats {

// Edge statistics over a Monte Carlo sample of spectra: scaled
// first-component marginals and the scaled top-eigenvalue triple.
//
// The first-component marginals sqrt(n) * beta_{n-k} are compared against
// the modulus of a standard normal of the matching symmetry class:
// half-normal for beta = 1, |CN(0,1)| (Rayleigh with unit mean square) for
// beta = 2. The half-normal distance is reported for both classes as a
// reference column.
struct EdgeReport {
  std::size_t sample_count = 0;
  int beta = 1;
  // index k = 0,1,2 for beta_n, beta_{n-1}, beta_{n-2}
  std::array<double, 3> ks_first_component{};      // vs the class law
  std::array<double, 3> ks_half_normal{};          // reference
  std::size_t degenerate_triples = 0;              // scaled gap < 1e-8
  std::array<std::vector<double>, 3> scaled_triple_samples;
};

EdgeReport edge_statistics_suite(
    const std::vector<spectral::SpectralData>& samples, std::size_t n,
    double b_v, int beta);

// KS distance per triple component between two edge runs (n vs 2n style
// cross-check of the scaled edge law).
std::array<double, 3> edge_cross_n_ks(const EdgeReport& a,
                                      const EdgeReport& b);

}  // namespace rml::stats
