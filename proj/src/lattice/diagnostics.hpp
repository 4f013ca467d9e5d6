#pragma once

#include <cstddef>
#include <vector>

#include "lattice/lattice.hpp"

namespace rml::lattice {

struct PeriodicityReport {
  std::size_t particle = 0;   // 1-based index k
  double period = 0.0;        // tested period P
  double window = 0.0;        // span of t values compared
  double residual = 0.0;      // max |y_k(t+P) - y_k(t)|, y = x - 2 a t
};

// Time-periodicity residual of particle k in the moving frame, over sampled
// t in [t_start, t_start + window]; values at t + P come from the trajectory
// grid (linear interpolation between samples). Throws ParameterError when
// the trajectory does not cover [t_start, t_start + window + P].
PeriodicityReport periodicity_residual(const Trajectory& traj, std::size_t k,
                                       double period, double t_start,
                                       double window);

// Binary-motion residual: max over sampled t in the window of
// |(x_{k+2}(t) - x_k(t)) - mean offset|. The 2 a t frame shift cancels in
// the difference, so this is frame-independent.
double binary_residual(const Trajectory& traj, std::size_t k, double t_start,
                       double window);

struct DecayProfile {
  double c = 0.0;              // slope of the linear fit x_k ~ c k + d
  double d = 0.0;
  std::vector<double> residuals;   // |x_k - c k - d| over the fit window
  double log_slope = 0.0;          // slope of log|residual| vs k
  std::size_t k_begin = 0;         // 1-based, inclusive
};

// Least-squares fit of x_k = c k + d at the trajectory sample closest to
// time t. The line is fitted on the far quarter of [k_begin, k_end] (the
// quiet region), residuals reported over the whole window, and the
// log-linear decay slope computed from them (residuals below 1e-15 are
// clamped for the log).
DecayProfile decay_profile(const Trajectory& traj, double t,
                           std::size_t k_begin, std::size_t k_end);

// Largest displacement of the last particle from rest across the whole
// trajectory; small values certify the semi-infinite truncation.
double truncation_displacement(const Trajectory& traj);

}  // namespace rml::lattice
