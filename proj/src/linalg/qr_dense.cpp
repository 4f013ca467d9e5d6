#include "linalg/qr_dense.hpp"

#include <cmath>
#include <vector>

#include "kernels/kernels.hpp"

namespace rml::linalg {

Matrix qr_rq(const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix r = x;
  Matrix q = Matrix::identity(n);
  const auto& kr = kernels::active();
  std::vector<double> v(n), w(n);

  // Householder triangularization; reflectors applied to Q' as accumulated
  // row transforms so Q ends up explicit.
  for (std::size_t k = 0; k < n; ++k) {
    double below2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) below2 += r(i, k) * r(i, k);
    if (below2 == 0.0) continue;  // column already triangular
    const double norm2 = below2 + r(k, k) * r(k, k);
    const double sigma = std::sqrt(norm2);
    const double alpha = r(k, k) >= 0.0 ? -sigma : sigma;
    for (std::size_t i = k; i < n; ++i) v[i] = r(i, k);
    v[k] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;

    // r <- (I - tau v v') r
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < n; ++i) s += v[i] * r(i, j);
      w[j] = tau * s;
    }
    for (std::size_t i = k; i < n; ++i) {
      const double vi = v[i];
      for (std::size_t j = k; j < n; ++j) r(i, j) -= vi * w[j];
    }
    // q <- q (I - tau v v')   (columns k.. of q updated)
    for (std::size_t i = 0; i < n; ++i) {
      double s = kr.dot(q.row(i) + k, v.data() + k, n - k);
      kr.axpy(-tau * s, v.data() + k, q.row(i) + k, n - k);
    }
  }

  // Enforce diag(R) >= 0 by a sign similarity folded into Q and R.
  std::vector<double> sign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) < 0.0) sign[i] = -1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sign[i] < 0.0)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = -r(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) *= sign[j];
  }

  // out = R Q; R upper triangular, so row i of out needs rows >= i of Q.
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t l = i; l < n; ++l) s += r(i, l) * q(l, j);
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace rml::linalg
