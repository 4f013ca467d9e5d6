#pragma once

#include <vector>

#include "spectral/spectral.hpp"

namespace rml::toda {

// Closed-form Toda flow through the spectral data (lambda_j, beta_j):
//   |u_{1j}(t)|^2 = beta_j^2 e^{2 lambda_j t} / sum_i beta_i^2 e^{2 lambda_i t}
//   X_11(t)      = sum_j lambda_j |u_{1j}(t)|^2
//   E(t)         = sum_j (lambda_j - X_11(t))^2 |u_{1j}(t)|^2
// Exponentials are taken relative to lambda_max, so every weight lies in
// (0, 1] and the formulas stay finite for arbitrarily large t.
//
// Reusable evaluator; the free functions below wrap it for one-off calls.
class MoserEvaluator {
public:
  explicit MoserEvaluator(const spectral::SpectralData& sd);

  double energy(double t) const;
  double x11(double t) const;

private:
  void weights(double t) const;  // fills w_, s0_, s1_

  const std::vector<double>& lambda_;
  std::vector<double> beta2_;
  mutable std::vector<double> w_;
  mutable double s0_ = 0.0, s1_ = 0.0;
};

double energy(const spectral::SpectralData& sd, double t);
double x11(const spectral::SpectralData& sd, double t);

struct TodaClock {
  double epsilon = 0.0;
  double t1 = 0.0;        // halting time T^(1)
  double x11_at_t1 = 0.0;
  double energy_at_t1 = 0.0;
};

// First time E(t) falls to epsilon^2: geometric forward scan (factor 1.25)
// brackets the first down-crossing on the grid, then bisection refines to
// relative 1e-12 in t. t1 = 0 when E(0) <= epsilon^2 already. Throws
// NumericError if the scan passes t = 1e6 without crossing (degenerate
// spectrum / beta_max ~ 0).
TodaClock halting_time_t1(const spectral::SpectralData& sd, double epsilon);

// Frobenius norms of the off-diagonal block for every split position
// j = 1..n-1; entry j-1 corresponds to the j x (n-j) split.
std::vector<double> deflation_residuals(const ensembles::RandomMatrix& x);

}  // namespace rml::toda
