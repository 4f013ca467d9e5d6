#include "stats/scalings.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace rml::stats {

void ScalingConstants::validate() const {
  if (!(c_v > 0.0)) throw ParameterError("ScalingConstants: C_v must be > 0");
}

bool scaling_region_ok(double eps, std::size_t n, double tau) {
  if (!(eps > 0.0) || eps >= 1.0 || n < 2) return false;
  return std::log(1.0 / eps) / std::log(static_cast<double>(n)) >=
         5.0 / 3.0 + 0.5 * tau;
}

namespace {

double scale_block(std::size_t n, const ScalingConstants& c) {
  c.validate();
  return std::pow(c.c_v, 2.0 / 3.0) * std::pow(2.0, -2.0 / 3.0) *
         std::pow(static_cast<double>(n), 2.0 / 3.0);
}

}  // namespace

double theorem1_scale(double t1, std::size_t n, double eps,
                      const ScalingConstants& c) {
  if (t1 < 0.0) throw ParameterError("theorem1_scale: t1 must be >= 0");
  if (!(eps > 0.0) || eps >= 1.0) {
    throw ParameterError("theorem1_scale: eps must lie in (0, 1)");
  }
  const double log_term =
      std::log(1.0 / eps) - (2.0 / 3.0) * std::log(static_cast<double>(n));
  const double denom = scale_block(n, c) * log_term;
  if (!(denom > 0.0)) {
    throw NumericError("theorem1_scale: nonpositive denominator "
                       "(outside the scaling region)");
  }
  return t1 / denom;
}

double gap_scale(const spectral::SpectralData& sd, std::size_t n,
                 const ScalingConstants& c) {
  const double gap = sd.top_gap();
  if (!(gap > 0.0)) {
    throw NumericError("gap_scale: degenerate sample (zero top gap)");
  }
  return 1.0 / (scale_block(n, c) * gap);
}

}  // namespace rml::stats
