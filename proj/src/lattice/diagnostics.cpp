#include "lattice/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "common/errors.hpp"

namespace rml::lattice {

namespace {

// Moving-frame position of particle k interpolated at time t.
double frame_position_at(const Trajectory& traj, std::size_t k, double t) {
  const auto& ts = traj.times;
  const auto it = std::lower_bound(ts.begin(), ts.end(), t - 1e-12);
  if (it == ts.end()) {
    throw ParameterError("trajectory does not cover requested time");
  }
  const std::size_t hi = static_cast<std::size_t>(it - ts.begin());
  auto value = [&](std::size_t s) {
    return traj.position(s, k) - 2.0 * traj.a * ts[s];
  };
  if (std::fabs(ts[hi] - t) <= 1e-9 || hi == 0) return value(hi);
  const std::size_t lo = hi - 1;
  const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
  return (1.0 - w) * value(lo) + w * value(hi);
}

std::pair<std::size_t, std::size_t> sample_range(const Trajectory& traj,
                                                 double t_start,
                                                 double t_stop) {
  const auto& ts = traj.times;
  const auto b = std::lower_bound(ts.begin(), ts.end(), t_start - 1e-12);
  const auto e = std::upper_bound(ts.begin(), ts.end(), t_stop + 1e-12);
  if (b == ts.end() || b >= e) {
    throw ParameterError("trajectory does not cover requested window");
  }
  return {static_cast<std::size_t>(b - ts.begin()),
          static_cast<std::size_t>(e - ts.begin())};
}

}  // namespace

PeriodicityReport periodicity_residual(const Trajectory& traj, std::size_t k,
                                       double period, double t_start,
                                       double window) {
  if (k < 1 || k > traj.k_count) {
    throw ParameterError("periodicity_residual: particle index out of range");
  }
  if (!(period > 0.0) || window < 0.0) {
    throw ParameterError("periodicity_residual: bad period/window");
  }
  if (traj.times.back() + 1e-9 < t_start + window + period) {
    throw ParameterError("periodicity_residual: trajectory too short");
  }

  PeriodicityReport rep;
  rep.particle = k;
  rep.period = period;
  rep.window = window;

  const auto [lo, hi] = sample_range(traj, t_start, t_start + window);
  double worst = 0.0;
  for (std::size_t s = lo; s < hi; ++s) {
    const double t = traj.times[s];
    const double now = traj.position(s, k) - 2.0 * traj.a * t;
    const double later = frame_position_at(traj, k, t + period);
    worst = std::max(worst, std::fabs(later - now));
  }
  rep.residual = worst;
  return rep;
}

double binary_residual(const Trajectory& traj, std::size_t k, double t_start,
                       double window) {
  if (k < 1 || k + 2 > traj.k_count) {
    throw ParameterError("binary_residual: need particles k and k+2");
  }
  const auto [lo, hi] = sample_range(traj, t_start, t_start + window);
  double sum = 0.0;
  for (std::size_t s = lo; s < hi; ++s) {
    sum += traj.position(s, k + 2) - traj.position(s, k);
  }
  const double offset = sum / static_cast<double>(hi - lo);
  double worst = 0.0;
  for (std::size_t s = lo; s < hi; ++s) {
    const double diff = traj.position(s, k + 2) - traj.position(s, k);
    worst = std::max(worst, std::fabs(diff - offset));
  }
  return worst;
}

DecayProfile decay_profile(const Trajectory& traj, double t,
                           std::size_t k_begin, std::size_t k_end) {
  if (k_begin < 1 || k_end > traj.k_count || k_begin + 3 > k_end) {
    throw ParameterError("decay_profile: fit window too small");
  }
  // sample closest to t
  const auto& ts = traj.times;
  std::size_t s = 0;
  double best = std::fabs(ts[0] - t);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double d = std::fabs(ts[i] - t);
    if (d < best) {
      best = d;
      s = i;
    }
  }

  // Fit the line on the far quarter of the window, where any disturbance
  // has decayed; residuals are then meaningful across the whole window.
  std::size_t fit_begin = k_end - std::max<std::size_t>((k_end - k_begin) / 4,
                                                        std::size_t{3});
  if (fit_begin < k_begin) fit_begin = k_begin;
  const double m = static_cast<double>(k_end - fit_begin + 1);
  double sk = 0.0, sx = 0.0, skk = 0.0, skx = 0.0;
  for (std::size_t k = fit_begin; k <= k_end; ++k) {
    const double kk = static_cast<double>(k);
    const double x = traj.position(s, k);
    sk += kk;
    sx += x;
    skk += kk * kk;
    skx += kk * x;
  }
  DecayProfile prof;
  prof.k_begin = k_begin;
  const double denom = m * skk - sk * sk;
  prof.c = (m * skx - sk * sx) / denom;
  prof.d = (sx - prof.c * sk) / m;

  const double mm = static_cast<double>(k_end - k_begin + 1);

  prof.residuals.reserve(k_end - k_begin + 1);
  double slk = 0.0, slx = 0.0, slkk = 0.0, slkx = 0.0;
  for (std::size_t k = k_begin; k <= k_end; ++k) {
    const double kk = static_cast<double>(k);
    const double r =
        std::fabs(traj.position(s, k) - prof.c * kk - prof.d);
    prof.residuals.push_back(r);
    const double lr = std::log(std::max(r, 1e-15));
    slk += kk;
    slx += lr;
    slkk += kk * kk;
    slkx += kk * lr;
  }
  prof.log_slope = (mm * slkx - slk * slx) / (mm * slkk - slk * slk);
  return prof;
}

double truncation_displacement(const Trajectory& traj) {
  const std::size_t last = traj.k_count;
  const double rest = traj.positions.front()[last - 1];
  double worst = 0.0;
  for (const auto& xs : traj.positions) {
    worst = std::max(worst, std::fabs(xs[last - 1] - rest));
  }
  return worst;
}

}  // namespace rml::lattice
