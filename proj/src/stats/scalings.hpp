#pragma once

#include "spectral/spectral.hpp"

namespace rml::stats {

// Ensemble-dependent constants of the halting-time limit law. Under this
// project's normalization the equilibrium measure is the semicircle on
// [-2, 2], so b_v = 2; C_v defaults to 1 because the acceptance comparisons
// are two-sample and therefore invariant under any common C_v.
struct ScalingConstants {
  double c_v = 1.0;
  double b_v = 2.0;

  void validate() const;  // c_v > 0
};

// (eps, n) lies in the halting-time scaling region
// log eps^{-1} / log n >= 5/3 + tau/2 for the configured tau in (0, 1).
bool scaling_region_ok(double eps, std::size_t n, double tau = 0.5);

// t1 / (C_v^{2/3} 2^{-2/3} n^{2/3} (log eps^{-1} - (2/3) log n)).
// Throws NumericError when the denominator is not positive.
double theorem1_scale(double t1, std::size_t n, double eps,
                      const ScalingConstants& c);

// 1 / (C_v^{2/3} 2^{-2/3} n^{2/3} (lambda_n - lambda_{n-1})).
// Throws NumericError on a zero top gap.
double gap_scale(const spectral::SpectralData& sd, std::size_t n,
                 const ScalingConstants& c);

}  // namespace rml::stats
