#include "toda/toda.hpp"

#include <cmath>

#include "common/errors.hpp"
#include "kernels/kernels.hpp"

namespace rml::toda {

MoserEvaluator::MoserEvaluator(const spectral::SpectralData& sd)
    : lambda_(sd.lambda) {
  sd.validate();
  beta2_.resize(sd.n());
  for (std::size_t j = 0; j < sd.n(); ++j) beta2_[j] = sd.beta[j] * sd.beta[j];
  w_.resize(sd.n());
}

void MoserEvaluator::weights(double t) const {
  if (t < 0.0) throw ParameterError("Toda flow evaluated at negative t");
  const std::size_t n = lambda_.size();
  kernels::active().moser_weights(lambda_.data(), beta2_.data(), t,
                                  lambda_.back(), w_.data(), n, &s0_, &s1_);
  if (!(s0_ > 0.0)) {
    throw NumericError("Moser weights vanished (beta_max = 0?)");
  }
}

double MoserEvaluator::x11(double t) const {
  weights(t);
  return s1_ / s0_;
}

double MoserEvaluator::energy(double t) const {
  weights(t);
  const double center = s1_ / s0_;
  // Second pass over nonnegative terms; no cancellation even at E ~ eps^2.
  return kernels::active().weighted_sqdev(lambda_.data(), w_.data(), center,
                                          lambda_.size()) /
         s0_;
}

double energy(const spectral::SpectralData& sd, double t) {
  return MoserEvaluator(sd).energy(t);
}

double x11(const spectral::SpectralData& sd, double t) {
  return MoserEvaluator(sd).x11(t);
}

TodaClock halting_time_t1(const spectral::SpectralData& sd, double epsilon) {
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw ParameterError("halting_time_t1: epsilon must lie in (0, 1)");
  }
  MoserEvaluator ev(sd);
  const double target = epsilon * epsilon;

  TodaClock clock;
  clock.epsilon = epsilon;

  double e0 = ev.energy(0.0);
  if (e0 <= target) {
    clock.t1 = 0.0;
    clock.x11_at_t1 = ev.x11(0.0);
    clock.energy_at_t1 = e0;
    return clock;
  }

  // Geometric scan for the first grid interval with a down-crossing.
  double t_lo = 0.0;
  double t_hi = 1e-2;
  for (;;) {
    if (t_hi > 1e6) {
      throw NumericError("halting_time_t1: no crossing below t = 1e6");
    }
    if (ev.energy(t_hi) <= target) break;
    t_lo = t_hi;
    t_hi *= 1.25;
  }

  // Bisection to relative 1e-12 in t.
  while (t_hi - t_lo > 1e-12 * t_hi) {
    const double mid = 0.5 * (t_lo + t_hi);
    if (mid <= t_lo || mid >= t_hi) break;
    if (ev.energy(mid) <= target) {
      t_hi = mid;
    } else {
      t_lo = mid;
    }
  }

  clock.t1 = t_hi;
  clock.x11_at_t1 = ev.x11(t_hi);
  clock.energy_at_t1 = ev.energy(t_hi);
  return clock;
}

std::vector<double> deflation_residuals(const ensembles::RandomMatrix& x) {
  const std::size_t n = x.n();
  if (n < 2) return {};
  // block(j) = x[0..j-1, j..n-1]; accumulate squared norms incrementally:
  // moving the split from j to j+1 adds row j's tail and removes column j's
  // head. Direct O(n^2) double loop is simpler and fast enough.
  std::vector<double> res(n - 1, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t c = j; c < n; ++c) {
        const double re = x.re(i, c);
        s += re * re;
        if (x.is_complex()) {
          const double im = x.im(i, c);
          s += im * im;
        }
      }
    }
    res[j - 1] = std::sqrt(s);
  }
  return res;
}

}  // namespace rml::toda
