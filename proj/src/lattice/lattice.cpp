#include "lattice/lattice.hpp"

#include <cmath>

#include "common/errors.hpp"
#include "kernels/kernels.hpp"

namespace rml::lattice {

namespace {

// a_k = F(x_{k-1} - x_k) - F(x_k - x_{k+1}) with x_0 the driver and x_{K+1}
// the ghost. gaps/forces buffers hold K+1 bond values.
void accelerations(const LatticeState& s, double t, std::vector<double>& gaps,
                   std::vector<double>& forces, std::vector<double>& acc) {
  const std::size_t k_count = s.size();
  gaps.resize(k_count + 1);
  forces.resize(k_count + 1);
  acc.resize(k_count);

  gaps[0] = s.driver.position(t) - s.x[0];
  for (std::size_t k = 1; k < k_count; ++k) gaps[k] = s.x[k - 1] - s.x[k];
  gaps[k_count] = s.x[k_count - 1] - s.ghost;

  if (s.exp_force) {
    kernels::active().vexp(gaps.data(), forces.data(), k_count + 1);
  } else {
    for (std::size_t k = 0; k <= k_count; ++k) forces[k] = s.force(gaps[k]);
  }
  for (std::size_t k = 0; k < k_count; ++k) acc[k] = forces[k] - forces[k + 1];
}

}  // namespace

LatticeState init_shock(std::size_t k_count, double a) {
  if (k_count < 10) throw ParameterError("init_shock: K must be >= 10");
  if (a < 0.0) throw ParameterError("init_shock: a must be >= 0");
  LatticeState s;
  s.x.resize(k_count);
  s.v.assign(k_count, 0.0);
  for (std::size_t k = 0; k < k_count; ++k) {
    s.x[k] = static_cast<double>(k + 1);
  }
  s.driver.mode = Driver::Mode::shock;
  s.driver.a = a;
  s.ghost = static_cast<double>(k_count + 1);
  return s;
}

LatticeState init_driven(std::size_t k_count, double a, double gamma,
                         std::function<double(double)> h) {
  if (k_count < 10) throw ParameterError("init_driven: K must be >= 10");
  if (!(gamma > 0.0)) throw ParameterError("init_driven: gamma must be > 0");
  LatticeState s;
  s.x.assign(k_count, 0.0);
  s.v.assign(k_count, 0.0);
  s.driver.mode = Driver::Mode::driven;
  s.driver.a = a;
  s.driver.gamma = gamma;
  s.driver.h = std::move(h);
  s.ghost = 0.0;
  return s;
}

void set_force(LatticeState& s, std::function<double(double)> f) {
  s.force = std::move(f);
  s.exp_force = !s.force;
}

void step(LatticeState& s, double dt) {
  if (!(dt > 0.0)) throw ParameterError("lattice step: dt must be positive");
  const std::size_t k_count = s.size();
  thread_local std::vector<double> gaps, forces, acc0, acc1;

  accelerations(s, s.t, gaps, forces, acc0);
  const double half_dt2 = 0.5 * dt * dt;
  for (std::size_t k = 0; k < k_count; ++k) {
    s.x[k] += dt * s.v[k] + half_dt2 * acc0[k];
    if (std::fabs(s.x[k]) > 1e6) {
      throw NumericError("lattice step: position blow-up (|x| > 1e6)");
    }
  }
  const double t_new = s.t + dt;
  accelerations(s, t_new, gaps, forces, acc1);
  for (std::size_t k = 0; k < k_count; ++k) {
    s.v[k] += 0.5 * dt * (acc0[k] + acc1[k]);
  }
  s.t = t_new;
}

double energy(const LatticeState& s) {
  if (!s.exp_force) {
    throw ParameterError("lattice energy: defined for the exp force only");
  }
  const std::size_t k_count = s.size();
  double e = 0.0;
  for (double v : s.v) e += 0.5 * v * v;
  e += std::exp(s.driver.position(s.t) - s.x[0]);
  for (std::size_t k = 1; k < k_count; ++k) {
    e += std::exp(s.x[k - 1] - s.x[k]);
  }
  e += std::exp(s.x[k_count - 1] - s.ghost);
  return e;
}

Trajectory simulate(LatticeState& s, double t_end, double dt,
                    std::size_t stride) {
  if (!(dt > 0.0)) throw ParameterError("simulate: dt must be positive");
  if (t_end < s.t) throw ParameterError("simulate: t_end before current t");
  if (stride == 0) stride = 1;

  Trajectory traj;
  traj.k_count = s.size();
  traj.a = s.driver.a;
  traj.times.push_back(s.t);
  traj.positions.push_back(s.x);
  traj.velocities.push_back(s.v);

  const std::size_t steps =
      static_cast<std::size_t>(std::ceil((t_end - s.t) / dt - 1e-12));
  for (std::size_t i = 1; i <= steps; ++i) {
    step(s, dt);
    if (i % stride == 0 || i == steps) {
      traj.times.push_back(s.t);
      traj.positions.push_back(s.x);
      traj.velocities.push_back(s.v);
    }
  }
  return traj;
}

void periodic_step(PeriodicChain& c, double dt) {
  const std::size_t k_count = c.x.size();
  const double span = static_cast<double>(k_count);
  thread_local std::vector<double> gaps, forces, acc0, acc1;
  gaps.resize(k_count);
  forces.resize(k_count);
  acc0.resize(k_count);
  acc1.resize(k_count);

  auto compute = [&](std::vector<double>& acc) {
    for (std::size_t k = 0; k + 1 < k_count; ++k) gaps[k] = c.x[k] - c.x[k + 1];
    gaps[k_count - 1] = c.x[k_count - 1] - c.x[0] - span;
    kernels::active().vexp(gaps.data(), forces.data(), k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
      acc[k] = forces[(k + k_count - 1) % k_count] - forces[k];
    }
  };
  compute(acc0);
  const double half_dt2 = 0.5 * dt * dt;
  for (std::size_t k = 0; k < k_count; ++k) {
    c.x[k] += dt * c.v[k] + half_dt2 * acc0[k];
  }
  compute(acc1);
  for (std::size_t k = 0; k < k_count; ++k) {
    c.v[k] += 0.5 * dt * (acc0[k] + acc1[k]);
  }
  c.t += dt;
}

double periodic_energy(const PeriodicChain& c) {
  const std::size_t k_count = c.x.size();
  double e = 0.0;
  for (double v : c.v) e += 0.5 * v * v;
  for (std::size_t k = 0; k + 1 < k_count; ++k) {
    e += std::exp(c.x[k] - c.x[k + 1]);
  }
  e += std::exp(c.x[k_count - 1] - c.x[0] - static_cast<double>(k_count));
  return e;
}

}  // namespace rml::lattice
