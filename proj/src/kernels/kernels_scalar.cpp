#include "kernels/kernels.hpp"

#include <cmath>

namespace rml::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void vexp_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < -708.39) {
      y[i] = 0.0;
    } else {
      y[i] = std::exp(x[i]);
    }
  }
}

void moser_weights_scalar(const double* lam, const double* b2, double t,
                          double shift, double* w, std::size_t n, double* s0,
                          double* s1) {
  const double two_t = 2.0 * t;
  double acc0 = 0.0, acc1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = two_t * (lam[j] - shift);
    const double wj = e < -708.39 ? 0.0 : b2[j] * std::exp(e);
    w[j] = wj;
    acc0 += wj;
    acc1 += lam[j] * wj;
  }
  *s0 = acc0;
  *s1 = acc1;
}

double weighted_sqdev_scalar(const double* lam, const double* w, double center,
                             std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = lam[j] - center;
    s += w[j] * d * d;
  }
  return s;
}

}  // namespace

const Ops& scalar() {
  static const Ops ops = {"scalar",       dot_scalar,          axpy_scalar,
                          vexp_scalar,    moser_weights_scalar,
                          weighted_sqdev_scalar};
  return ops;
}

}  // namespace rml::kernels
