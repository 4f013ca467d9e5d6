#include "toda/ode_oracle.hpp"

#include <cmath>

#include "common/errors.hpp"
#include "linalg/householder.hpp"
#include "linalg/ql.hpp"

namespace rml::toda {

namespace {

using C = std::complex<double>;

// B(X) = X_- - X_-^*: strictly lower part minus its adjoint.
MatrixC commutator_with_b(const MatrixC& x) {
  const std::size_t n = x.n;
  MatrixC b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      b(i, j) = x(i, j);
      b(j, i) = -std::conj(x(i, j));
    }
  }
  MatrixC out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      C s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += x(i, k) * b(k, j) - b(i, k) * x(k, j);
      }
      out(i, j) = s;
    }
  }
  return out;
}

double fro_norm(const MatrixC& x) {
  double s = 0.0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

void rk4_step(MatrixC& x, double h) {
  const std::size_t m = x.a.size();
  const MatrixC k1 = commutator_with_b(x);
  MatrixC tmp = x;
  for (std::size_t i = 0; i < m; ++i) tmp.a[i] = x.a[i] + 0.5 * h * k1.a[i];
  const MatrixC k2 = commutator_with_b(tmp);
  for (std::size_t i = 0; i < m; ++i) tmp.a[i] = x.a[i] + 0.5 * h * k2.a[i];
  const MatrixC k3 = commutator_with_b(tmp);
  for (std::size_t i = 0; i < m; ++i) tmp.a[i] = x.a[i] + h * k3.a[i];
  const MatrixC k4 = commutator_with_b(tmp);
  for (std::size_t i = 0; i < m; ++i) {
    x.a[i] += (h / 6.0) * (k1.a[i] + 2.0 * k2.a[i] + 2.0 * k3.a[i] + k4.a[i]);
  }
}

void advance_to(MatrixC& x, double& t, double target, double dt,
                double norm_cap) {
  const double remaining = target - t;
  if (remaining <= 0.0) {
    t = target;
    return;
  }
  std::size_t steps =
      static_cast<std::size_t>(std::ceil(remaining / dt - 1e-12));
  if (steps == 0) steps = 1;
  const double h = remaining / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    rk4_step(x, h);
    if (fro_norm(x) > norm_cap) {
      throw NumericError("ode_oracle: integrator blow-up (||X|| > 10 ||X0||)");
    }
  }
  t = target;
}

}  // namespace

MatrixC to_complex(const ensembles::RandomMatrix& h) {
  const std::size_t n = h.n();
  MatrixC x(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = C(h.re(i, j), h.is_complex() ? h.im(i, j) : 0.0);
    }
  }
  return x;
}

std::vector<MatrixC> ode_states_at(const ensembles::RandomMatrix& h,
                                   const std::vector<double>& times,
                                   double dt) {
  if (!(dt > 0.0)) throw ParameterError("ode oracle: dt must be positive");
  MatrixC x = to_complex(h);
  const double norm_cap = 10.0 * fro_norm(x) + 1e-300;
  double t = 0.0;
  std::vector<MatrixC> out;
  out.reserve(times.size());
  double prev = 0.0;
  for (double target : times) {
    if (target < prev || target < 0.0) {
      throw ParameterError("ode oracle: times must be nondecreasing and >= 0");
    }
    if (target > t) advance_to(x, t, target, dt, norm_cap);
    out.push_back(x);
    prev = target;
  }
  return out;
}

OdeTrajectory ode_oracle(const ensembles::RandomMatrix& h, double t_end,
                         double dt, std::size_t sample_stride) {
  if (!(dt > 0.0)) throw ParameterError("ode oracle: dt must be positive");
  if (t_end < 0.0) throw ParameterError("ode oracle: t_end must be >= 0");
  if (sample_stride == 0) sample_stride = 1;

  OdeTrajectory traj;
  MatrixC x = to_complex(h);
  const double norm_cap = 10.0 * fro_norm(x) + 1e-300;
  traj.times.push_back(0.0);
  traj.states.push_back(x);

  const std::size_t steps =
      t_end > 0.0 ? static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12))
                  : 0;
  const double hstep = steps > 0 ? t_end / static_cast<double>(steps) : 0.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    rk4_step(x, hstep);
    if (fro_norm(x) > norm_cap) {
      throw NumericError("ode_oracle: integrator blow-up (||X|| > 10 ||X0||)");
    }
    if (k % sample_stride == 0 || k == steps) {
      traj.times.push_back(hstep * static_cast<double>(k));
      traj.states.push_back(x);
    }
  }
  return traj;
}

double off_first_row_energy(const MatrixC& x) {
  double s = 0.0;
  for (std::size_t j = 1; j < x.n; ++j) s += std::norm(x(0, j));
  return s;
}

std::vector<double> hermitian_eigenvalues(const MatrixC& x) {
  const std::size_t n = x.n;
  linalg::Matrix re(n, n), im(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      re(i, j) = x(i, j).real();
      im(i, j) = x(i, j).imag();
    }
  }
  return linalg::eigenvalues(linalg::tridiagonalize_hermitian(re, im));
}

}  // namespace rml::toda
