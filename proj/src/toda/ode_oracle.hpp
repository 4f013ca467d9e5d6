#pragma once

#include <complex>
#include <vector>

#include "ensembles/ensembles.hpp"

namespace rml::toda {

// Dense complex matrix for the ODE oracle path only; production code never
// touches it.
struct MatrixC {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;

  MatrixC() = default;
  explicit MatrixC(std::size_t dim) : n(dim), a(dim * dim) {}

  std::complex<double>& operator()(std::size_t i, std::size_t j) {
    return a[i * n + j];
  }
  std::complex<double> operator()(std::size_t i, std::size_t j) const {
    return a[i * n + j];
  }
};

MatrixC to_complex(const ensembles::RandomMatrix& h);

struct OdeTrajectory {
  std::vector<double> times;
  std::vector<MatrixC> states;
};

// Classical 4th-order integration of dX/dt = [X, B(X)], B = X_- - X_-^*.
// Independent oracle for the Moser formulas; not a production path.
// Throws NumericError if ||X||_F exceeds 10x its initial value.
OdeTrajectory ode_oracle(const ensembles::RandomMatrix& h, double t_end,
                         double dt, std::size_t sample_stride = 1);

// States at the given nondecreasing times (step size never exceeds dt).
std::vector<MatrixC> ode_states_at(const ensembles::RandomMatrix& h,
                                   const std::vector<double>& times,
                                   double dt);

// sum_{j >= 2} |X_{1j}|^2, the quantity T^(1) watches.
double off_first_row_energy(const MatrixC& x);

// Ascending eigenvalues (Hermitian input), for isospectrality checks.
std::vector<double> hermitian_eigenvalues(const MatrixC& x);

}  // namespace rml::toda
