#include "stats/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "common/errors.hpp"
#include "spectral/semicircle.hpp"

namespace rml::stats {

bool condition1(const spectral::SpectralData& sd, double p) {
  if (!(p > 0.0) || p >= 1.0 / 3.0) {
    throw ParameterError("condition1: p must lie in (0, 1/3)");
  }
  const auto& l = sd.lambda;
  const std::size_t n = l.size();
  if (n < 3) throw ParameterError("condition1: need n >= 3");
  return l[n - 2] - l[n - 3] >= p * (l[n - 1] - l[n - 2]);
}

Condition2Result condition2(const spectral::SpectralData& sd, double s,
                            double b_v, const std::vector<double>& gamma) {
  (void)b_v;  // the quantiles already encode the equilibrium measure
  if (!(s > 0.0)) throw ParameterError("condition2: s must be positive");
  const auto& l = sd.lambda;
  const auto& beta = sd.beta;
  const std::size_t n = l.size();
  if (n < 3) throw ParameterError("condition2: need n >= 3");
  if (gamma.size() != n) {
    throw ParameterError("condition2: quantile table size mismatch");
  }
  const double nd = static_cast<double>(n);

  Condition2Result r;

  const double beta_up = std::pow(nd, -0.5 + 0.5 * s);
  r.beta_upper = true;
  for (double bj : beta) {
    if (bj > beta_up) {
      r.beta_upper = false;
      break;
    }
  }

  const double beta_lo = std::pow(nd, -0.5 - 0.5 * s);
  r.beta_lower = beta[n - 1] >= beta_lo && beta[n - 2] >= beta_lo;

  const double gap_lo = std::pow(nd, -2.0 / 3.0 - s);
  const double gap_hi = std::pow(nd, -2.0 / 3.0 + s);
  const double g1 = l[n - 1] - l[n - 2];
  const double g2 = l[n - 1] - l[n - 3];
  r.edge_gaps = g1 >= gap_lo && g1 <= gap_hi && g2 >= gap_lo && g2 <= gap_hi;

  r.rigidity = true;
  const double rig_scale = std::pow(nd, -2.0 / 3.0 + s);
  for (std::size_t j = 1; j <= n; ++j) {
    const double mins = static_cast<double>(std::min(j, n - j + 1));
    const double bound = rig_scale * std::pow(mins, -1.0 / 3.0);
    if (std::fabs(l[j - 1] - gamma[j - 1]) > bound) {
      r.rigidity = false;
      break;
    }
  }
  return r;
}

Condition2Result condition2(const spectral::SpectralData& sd, double s,
                            double b_v) {
  return condition2(sd, s, b_v, spectral::semicircle_quantiles(sd.n()));
}

std::vector<double> condition1_complement_probabilities(
    const std::vector<spectral::SpectralData>& samples,
    const std::vector<double>& p_grid) {
  std::vector<double> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) {
    std::size_t violations = 0;
    for (const auto& sd : samples) {
      if (!condition1(sd, p)) ++violations;
    }
    out.push_back(static_cast<double>(violations) /
                  static_cast<double>(samples.size()));
  }
  return out;
}

}  // namespace rml::stats
