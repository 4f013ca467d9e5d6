#include "linalg/householder.hpp"

#include <cmath>
#include <vector>

#include "kernels/kernels.hpp"

namespace rml::linalg {

namespace {
const kernels::Ops& K() { return kernels::active(); }
}  // namespace

Tridiagonal tridiagonalize_symmetric(Matrix a) {
  const std::size_t n = a.rows();
  Tridiagonal t;
  t.diag.resize(n);
  t.off.assign(n >= 1 ? n - 1 : 0, 0.0);
  if (n == 0) return t;

  std::vector<double> v(n), w(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // trailing block size
    // Row k of a symmetric matrix is contiguous; use it as the column.
    double* x = a.row(k) + k + 1;
    double sigma2 = K().dot(x, x, m);
    double x0 = x[0];
    double sigma = std::sqrt(sigma2);
    if (sigma == 0.0 || sigma2 == x0 * x0) {
      // Already tridiagonal in this column.
      t.off[k] = x0;
      continue;
    }
    const double alpha = x0 >= 0.0 ? -sigma : sigma;
    // v = (x - alpha e1) normalized
    double* vv = v.data();
    vv[0] = x0 - alpha;
    for (std::size_t i = 1; i < m; ++i) vv[i] = x[i];
    const double vnorm = std::sqrt(K().dot(vv, vv, m));
    for (std::size_t i = 0; i < m; ++i) vv[i] /= vnorm;

    // u = S v over the trailing block S = a[k+1.., k+1..]
    double* uu = w.data();
    for (std::size_t i = 0; i < m; ++i) {
      uu[i] = K().dot(a.row(k + 1 + i) + k + 1, vv, m);
    }
    const double gamma = K().dot(vv, uu, m);
    // w = 2(u - gamma v); S -= v w' + w v'
    for (std::size_t i = 0; i < m; ++i) uu[i] = 2.0 * (uu[i] - gamma * vv[i]);
    for (std::size_t i = 0; i < m; ++i) {
      double* rowi = a.row(k + 1 + i) + k + 1;
      K().axpy(-vv[i], uu, rowi, m);
      K().axpy(-uu[i], vv, rowi, m);
    }
    t.off[k] = alpha;
  }

  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a(i, i);
  if (n >= 2) t.off[n - 2] = a(n - 2, n - 1);
  return t;
}

Tridiagonal tridiagonalize_hermitian(Matrix re, Matrix im) {
  const std::size_t n = re.rows();
  Tridiagonal t;
  t.diag.resize(n);
  t.off.assign(n >= 1 ? n - 1 : 0, 0.0);
  if (n == 0) return t;

  std::vector<double> vre(n), vim(n), ure(n), uim(n), wre(n), wim(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    // Column slice a[k+1.., k] = conj(row k slice). Work with the column.
    double* xre = vre.data();
    double* xim = vim.data();
    for (std::size_t i = 0; i < m; ++i) {
      xre[i] = re(k, k + 1 + i);
      xim[i] = -im(k, k + 1 + i);
    }
    const double sigma2 = K().dot(xre, xre, m) + K().dot(xim, xim, m);
    const double sigma = std::sqrt(sigma2);
    const double head2 = xre[0] * xre[0] + xim[0] * xim[0];
    if (sigma == 0.0 || sigma2 == head2) {
      t.off[k] = std::sqrt(head2);
      continue;
    }
    // mu = -e^{i arg(x0)} sigma; v = (x - mu e1)/||.||
    double phr, phi;
    const double habs = std::sqrt(head2);
    if (habs == 0.0) {
      phr = 1.0;
      phi = 0.0;
    } else {
      phr = xre[0] / habs;
      phi = xim[0] / habs;
    }
    const double mur = -phr * sigma;
    const double mui = -phi * sigma;
    xre[0] -= mur;
    xim[0] -= mui;
    const double vnorm =
        std::sqrt(K().dot(xre, xre, m) + K().dot(xim, xim, m));
    for (std::size_t i = 0; i < m; ++i) {
      xre[i] /= vnorm;
      xim[i] /= vnorm;
    }

    // u = S v on the trailing Hermitian block (4 real matvecs)
    for (std::size_t i = 0; i < m; ++i) {
      const double* rr = re.row(k + 1 + i) + k + 1;
      const double* ri = im.row(k + 1 + i) + k + 1;
      ure[i] = K().dot(rr, xre, m) - K().dot(ri, xim, m);
      uim[i] = K().dot(rr, xim, m) + K().dot(ri, xre, m);
    }
    // gamma = v* u (real by Hermitian symmetry, keep both parts anyway)
    const double gr =
        K().dot(xre, ure.data(), m) + K().dot(xim, uim.data(), m);
    const double gi =
        K().dot(xre, uim.data(), m) - K().dot(xim, ure.data(), m);
    for (std::size_t i = 0; i < m; ++i) {
      wre[i] = 2.0 * (ure[i] - (gr * xre[i] - gi * xim[i]));
      wim[i] = 2.0 * (uim[i] - (gr * xim[i] + gi * xre[i]));
    }
    // S -= v w* + w v*
    for (std::size_t i = 0; i < m; ++i) {
      double* rr = re.row(k + 1 + i) + k + 1;
      double* ri = im.row(k + 1 + i) + k + 1;
      K().axpy(-xre[i], wre.data(), rr, m);
      K().axpy(-xim[i], wim.data(), rr, m);
      K().axpy(-wre[i], xre, rr, m);
      K().axpy(-wim[i], xim, rr, m);
      K().axpy(-xim[i], wre.data(), ri, m);
      K().axpy(xre[i], wim.data(), ri, m);
      K().axpy(-wim[i], xre, ri, m);
      K().axpy(wre[i], xim, ri, m);
    }
    // Subdiagonal entry is mu; only its modulus survives the phase
    // similarity that makes the tridiagonal real.
    t.off[k] = sigma;
  }

  for (std::size_t i = 0; i < n; ++i) t.diag[i] = re(i, i);
  if (n >= 2) {
    const double er = re(n - 2, n - 1);
    const double ei = im(n - 2, n - 1);
    t.off[n - 2] = std::sqrt(er * er + ei * ei);
  }
  return t;
}

}  // namespace rml::linalg
