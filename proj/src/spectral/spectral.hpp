#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "ensembles/ensembles.hpp"
#include "linalg/matrix.hpp"

namespace rml::spectral {

// The sufficient statistic for the closed-form Toda flow: all eigenvalues in
// ascending order and the moduli of the first components of the normalized
// eigenvectors.
struct SpectralData {
  std::vector<double> lambda;  // ascending
  std::vector<double> beta;    // |first component|, beta[j] >= 0

  std::size_t n() const { return lambda.size(); }
  double lambda_max() const { return lambda.back(); }
  double top_gap() const;
  void validate() const;  // ordering and sum beta^2 = 1 within 1e-10
};

struct GapStatistics {
  double top_gap = 0.0;
  double second_gap = 0.0;
  // 2^{-2/3} n^{2/3} (b_v - lambda_{n-k+1}) for k = 1,2,3
  std::array<double, 3> scaled_edge_triple{};
};

// Householder reduction fixing the first coordinate, so the first components
// of eigenvectors survive in modulus. Hermitian input reduces to a real
// symmetric tridiagonal. Throws ContractViolation if the input is not
// self-adjoint.
linalg::Tridiagonal tridiagonalize(const ensembles::RandomMatrix& h);
linalg::Tridiagonal tridiagonalize(const linalg::Matrix& sym);

// Implicit-shift QL on the tridiagonal, accumulating only the first row of
// the transform; eigenvalues ascending, beta aligned.
SpectralData eigen_full(const linalg::Tridiagonal& t);

// Full pipeline for a sampled matrix.
SpectralData analyze(const ensembles::RandomMatrix& h);
SpectralData analyze(const linalg::Matrix& sym);

// Eigenvalues only (ascending) of a dense symmetric matrix.
std::vector<double> eigenvalues_of(const linalg::Matrix& sym);

GapStatistics gap_stats(const SpectralData& sd, std::size_t n, double b_v);

// Two-column CSV (lambda, beta).
void write_csv(std::ostream& os, const SpectralData& sd);

}  // namespace rml::spectral
