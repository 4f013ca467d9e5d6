#pragma once

#include <cstdint>
#include <vector>

#include "linalg/matrix.hpp"

namespace rml::iterative {

// One unshifted QR iteration on a real symmetric matrix: X = QR with
// diag(R) >= 0, result RQ. Output is similar to X and symmetric up to
// roundoff. Throws ContractViolation on asymmetric input.
linalg::Matrix qr_step(const linalg::Matrix& x);

struct QrRun {
  std::size_t k = 0;                  // iterations until halt
  std::vector<double> residuals;      // first-row off-diagonal norm, per iterate
  std::vector<double> final_diag;
  bool halted = false;                // false when k_max was reached
};

// Iterate X_{k+1} = qr_step(X_k) from X_0 = H until
// sqrt(sum_{j>=2} X_k[1,j]^2) < eps. Non-halting runs (k_max hit) are
// returned with halted = false; callers exclude them from tau statistics and
// report the count.
QrRun qr_halting(const linalg::Matrix& h, double eps, std::size_t k_max);

// A = (1/m) W W' with W an n x m standard gaussian array; b standard
// gaussian normalized to unit length. m >= n keeps A positive definite
// almost surely.
struct LinearSystem {
  linalg::Matrix a;
  std::vector<double> b;
};
LinearSystem wishart_system(std::size_t n, std::size_t m, std::uint64_t seed);

struct CgRun {
  std::size_t k = 0;
  std::vector<double> residuals;  // true residuals ||b - A x_k||, k = 0,1,...
  std::vector<double> x;
  bool halted = false;
};

// Conjugate gradient from x_0 = 0. Halting is on the recomputed true
// residual ||b - A x_k|| < eps, never on the recursive one, so halting-time
// statistics are immune to recurrence drift.
CgRun cg_halting(const linalg::Matrix& a, const std::vector<double>& b,
                 double eps, std::size_t k_max);

}  // namespace rml::iterative
