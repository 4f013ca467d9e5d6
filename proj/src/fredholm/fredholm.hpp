#pragma once

#include <cstddef>
#include <vector>

#include "linalg/matrix.hpp"

namespace rml::fredholm {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule by Newton iteration on P_N.
GaussLegendre gauss_legendre(std::size_t n);

// Symmetrized Nystrom discretization of the sine kernel
// K_s(x, y) = sin(s(x - y)) / (pi (x - y)) on L^2(-1, 1):
// M[i][j] = sqrt(w_i) K_s(x_i, x_j) sqrt(w_j), diagonal K_s(x, x) = s/pi.
struct KernelDiscretization {
  double s = 0.0;
  std::size_t n = 0;
  GaussLegendre rule;
  linalg::Matrix m;
};

KernelDiscretization discretize(double s, std::size_t n);

struct DetResult {
  double value = 0.0;
  double refinement_delta = 0.0;  // |det(N) - det(2N)|
  bool converged = false;         // refinement_delta < 1e-10
};

// det(I - M) by Cholesky (I - M is SPD since 0 <= eig(M) < 1), with an
// N-doubling refinement check recorded in the result metadata.
DetResult determinant(const KernelDiscretization& d);

// Raw det(I - M) at the given discretization, no refinement.
double determinant_raw(const KernelDiscretization& d);

// Eigenvalues of M, descending, clamped into [0, 1) (tiny negative roundoff
// is flushed to zero; anything below -1e-10 throws NumericError).
std::vector<double> eigenvalues(const KernelDiscretization& d);

struct ProductIdentity {
  double det = 0.0;
  double product = 0.0;   // prod_k (1 - lambda_k)
  double difference = 0.0;
};

// Two independent routes to the gap probability: a factorization of I - M
// and the eigenvalue product ("independent coin flips" form).
ProductIdentity product_identity(const KernelDiscretization& d);

struct GapProbability {
  double value = 0.0;
  std::size_t n_used = 0;
  double refinement_delta = 0.0;
  bool converged = false;
};

// F_s = det(1 - K_s) with automatic N-doubling from n_start until the
// refinement contract |F(N) - F(2N)| < 1e-10 holds (cap n = 1280).
GapProbability gap_probability(double s, std::size_t n_start = 60);

}  // namespace rml::fredholm
