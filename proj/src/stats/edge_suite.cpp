#include "stats/edge_suite.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace rml::stats {

EdgeReport edge_statistics_suite(
    const std::vector<spectral::SpectralData>& samples, std::size_t n,
    double b_v, int beta) {
  if (samples.size() < 100) {
    throw ParameterError("edge_statistics_suite: need at least 100 samples");
  }
  if (beta != 1 && beta != 2) {
    throw ParameterError("edge_statistics_suite: beta must be 1 or 2");
  }

  EdgeReport rep;
  rep.sample_count = samples.size();
  rep.beta = beta;

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  std::array<std::vector<double>, 3> beta_samples;
  for (auto& v : beta_samples) v.reserve(samples.size());
  for (auto& v : rep.scaled_triple_samples) v.reserve(samples.size());

  for (const auto& sd : samples) {
    if (sd.n() != n || sd.n() < 3) {
      throw ParameterError("edge_statistics_suite: sample dimension mismatch");
    }
    const auto g = spectral::gap_stats(sd, n, b_v);
    for (std::size_t k = 0; k < 3; ++k) {
      beta_samples[k].push_back(sqrt_n * sd.beta[sd.n() - 1 - k]);
      rep.scaled_triple_samples[k].push_back(g.scaled_edge_triple[k]);
    }
    const double gap1 = g.scaled_edge_triple[1] - g.scaled_edge_triple[0];
    const double gap2 = g.scaled_edge_triple[2] - g.scaled_edge_triple[1];
    if (gap1 < 1e-8 || gap2 < 1e-8) ++rep.degenerate_triples;
  }

  for (std::size_t k = 0; k < 3; ++k) {
    EmpiricalDistribution d(beta_samples[k]);
    rep.ks_half_normal[k] = ks_one_sample(d, half_normal_cdf);
    rep.ks_first_component[k] =
        beta == 1 ? rep.ks_half_normal[k] : ks_one_sample(d, rayleigh_unit_cdf);
  }
  return rep;
}

std::array<double, 3> edge_cross_n_ks(const EdgeReport& a,
                                      const EdgeReport& b) {
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = ks_two_sample(
        EmpiricalDistribution(a.scaled_triple_samples[k]),
        EmpiricalDistribution(b.scaled_triple_samples[k]));
  }
  return out;
}

}  // namespace rml::stats
