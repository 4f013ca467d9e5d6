#pragma once

#include <functional>
#include <vector>

namespace rml::lattice {

// Boundary particle x_0(t) driving a truncated semi-infinite chain.
struct Driver {
  enum class Mode { shock, driven };
  Mode mode = Mode::shock;
  double a = 0.0;       // mean velocity is 2a
  double gamma = 1.0;   // oscillation frequency (driven mode)
  std::function<double(double)> h;  // 2pi-periodic, driven mode only

  double position(double t) const {
    const double base = 2.0 * a * t;
    return mode == Mode::driven && h ? base + h(gamma * t) : base;
  }
};

// Truncated chain of K particles (k = 1..K stored at index k-1). The driver
// position is never stored, always evaluated; beyond particle K the chain is
// represented by a fixed ghost particle at its rest position, which keeps
// the uniform lattice in exact equilibrium and is invisible until the
// disturbance reaches the far boundary (the truncation-hygiene check guards
// that).
struct LatticeState {
  std::vector<double> x;
  std::vector<double> v;
  double t = 0.0;
  Driver driver;
  std::function<double(double)> force;  // pair force F, default exp
  bool exp_force = true;                // fast kernel path when F = exp
  double ghost = 0.0;                   // rest position of particle K+1

  std::size_t size() const { return x.size(); }
};

// Shock setup: x_k = k, velocities 0, x_0(t) = 2 a t. a = 0 gives the static
// uniform lattice used by the equilibrium tests.
LatticeState init_shock(std::size_t k_count, double a);

// Driven setup: all positions and velocities 0, x_0(t) = 2 a t + h(gamma t).
LatticeState init_driven(std::size_t k_count, double a, double gamma,
                         std::function<double(double)> h);

// Replace the exponential forces with a general pair force F.
void set_force(LatticeState& s, std::function<double(double)> f);

// One velocity-Verlet step. Particle 1 sees the driver as left neighbor;
// particle K sees the ghost. Throws NumericError if any |x| exceeds 1e6.
void step(LatticeState& s, double dt);

double energy(const LatticeState& s);  // exp-force chains only

struct Trajectory {
  std::size_t k_count = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> positions;
  std::vector<std::vector<double>> velocities;
  double a = 0.0;  // moving-frame velocity parameter of the run

  double position(std::size_t sample, std::size_t k) const {
    return positions[sample][k - 1];  // particles are 1-based
  }
};

// Integrate and record every `stride` steps (state at t = 0 included).
Trajectory simulate(LatticeState& s, double t_end, double dt,
                    std::size_t stride);

// Periodic ring of K particles used as the undriven test chain: x_{K+1}
// identified with x_1 + K. Exact equilibrium at integer spacing; energy is
// conserved up to the symplectic integrator's bounded oscillation.
struct PeriodicChain {
  std::vector<double> x;
  std::vector<double> v;
  double t = 0.0;
};

void periodic_step(PeriodicChain& c, double dt);
double periodic_energy(const PeriodicChain& c);

}  // namespace rml::lattice
