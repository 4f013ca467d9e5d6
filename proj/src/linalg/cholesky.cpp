#include "linalg/cholesky.hpp"

#include <cmath>

#include "common/errors.hpp"
#include "kernels/kernels.hpp"

namespace rml::linalg {

void cholesky(Matrix& a) {
  const std::size_t n = a.rows();
  const auto& k = kernels::active();
  for (std::size_t j = 0; j < n; ++j) {
    double* rowj = a.row(j);
    const double pivot = rowj[j] - k.dot(rowj, rowj, j);
    if (!(pivot > 0.0)) {
      throw NumericError("cholesky: matrix not positive definite");
    }
    const double ljj = std::sqrt(pivot);
    rowj[j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double* rowi = a.row(i);
      rowi[j] = (rowi[j] - k.dot(rowi, rowj, j)) / ljj;
    }
  }
  // zero strict upper triangle so the factor is usable as-is
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = 0.0;
}

double spd_determinant(Matrix a) {
  const std::size_t n = a.rows();
  cholesky(a);
  double det = 1.0;
  for (std::size_t i = 0; i < n; ++i) det *= a(i, i) * a(i, i);
  return det;
}

std::vector<double> spd_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  cholesky(a);
  // forward: L y = b
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    const double* rowi = a.row(i);
    s -= kernels::active().dot(rowi, b.data(), i);
    b[i] = s / rowi[i];
  }
  // backward: L' x = y
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a(j, ii) * b[j];
    b[ii] = s / a(ii, ii);
  }
  return b;
}

}  // namespace rml::linalg
