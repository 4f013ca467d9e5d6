// NEON variants for aarch64. Same range reduction and rational approximation
// as the AVX2 path, two lanes wide.

#include "kernels/kernels.hpp"

#if defined(RMLAB_KERNELS_NEON)

#include <arm_neon.h>

#include <cmath>
#include <cstdint>

namespace rml::kernels {
namespace {

inline float64x2_t exp2lanes(float64x2_t x) {
  const float64x2_t log2e = vdupq_n_f64(1.4426950408889634073599);
  const float64x2_t c1 = vdupq_n_f64(6.93145751953125e-1);
  const float64x2_t c2 = vdupq_n_f64(1.42860682030941723212e-6);
  const float64x2_t p0 = vdupq_n_f64(1.26177193074810590878e-4);
  const float64x2_t p1 = vdupq_n_f64(3.02994407707441961300e-2);
  const float64x2_t p2 = vdupq_n_f64(9.99999999999999999910e-1);
  const float64x2_t q0 = vdupq_n_f64(3.00198505138664455042e-6);
  const float64x2_t q1 = vdupq_n_f64(2.52448340349684104192e-3);
  const float64x2_t q2 = vdupq_n_f64(2.27265548208155028766e-1);
  const float64x2_t q3 = vdupq_n_f64(2.00000000000000000005e0);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);

  const float64x2_t lo_cut = vdupq_n_f64(-708.39);
  const float64x2_t hi_cut = vdupq_n_f64(709.782712893384);
  const uint64x2_t zero_mask = vcltq_f64(x, lo_cut);
  const uint64x2_t inf_mask = vcgtq_f64(x, hi_cut);
  x = vminq_f64(vmaxq_f64(x, lo_cut), hi_cut);

  const float64x2_t nd = vrndnq_f64(vmulq_f64(x, log2e));
  float64x2_t r = vfmsq_f64(x, nd, c1);
  r = vfmsq_f64(r, nd, c2);

  const float64x2_t rr = vmulq_f64(r, r);
  float64x2_t px = vfmaq_f64(p1, p0, rr);
  px = vfmaq_f64(p2, px, rr);
  px = vmulq_f64(px, r);
  float64x2_t qx = vfmaq_f64(q1, q0, rr);
  qx = vfmaq_f64(q2, qx, rr);
  qx = vfmaq_f64(q3, qx, rr);
  const float64x2_t er =
      vfmaq_f64(one, two, vdivq_f64(px, vsubq_f64(qx, px)));

  const int64x2_t n64 = vcvtq_s64_f64(nd);
  const int64x2_t ka = vshrq_n_s64(n64, 1);
  const int64x2_t kb = vsubq_s64(n64, ka);
  const int64x2_t bias = vdupq_n_s64(1023);
  const float64x2_t f1 =
      vreinterpretq_f64_s64(vshlq_n_s64(vaddq_s64(ka, bias), 52));
  const float64x2_t f2 =
      vreinterpretq_f64_s64(vshlq_n_s64(vaddq_s64(kb, bias), 52));

  float64x2_t y = vmulq_f64(vmulq_f64(er, f1), f2);
  y = vreinterpretq_f64_u64(vbicq_u64(vreinterpretq_u64_f64(y), zero_mask));
  y = vbslq_f64(inf_mask, vdupq_n_f64(HUGE_VAL), y);
  return y;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void vexp_neon(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, exp2lanes(vld1q_f64(x + i)));
  if (i < n) {
    double in[2] = {x[i], 0.0};
    double out[2];
    vst1q_f64(out, exp2lanes(vld1q_f64(in)));
    y[i] = out[0];
  }
}

void moser_weights_neon(const double* lam, const double* b2, double t,
                        double shift, double* w, std::size_t n, double* s0,
                        double* s1) {
  const float64x2_t two_t = vdupq_n_f64(2.0 * t);
  const float64x2_t vshift = vdupq_n_f64(shift);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vl = vld1q_f64(lam + i);
    const float64x2_t e = vmulq_f64(two_t, vsubq_f64(vl, vshift));
    const float64x2_t vw = vmulq_f64(vld1q_f64(b2 + i), exp2lanes(e));
    vst1q_f64(w + i, vw);
    acc0 = vaddq_f64(acc0, vw);
    acc1 = vfmaq_f64(acc1, vl, vw);
  }
  double r0 = vaddvq_f64(acc0);
  double r1 = vaddvq_f64(acc1);
  for (; i < n; ++i) {
    const double e = 2.0 * t * (lam[i] - shift);
    const double wi = e < -708.39 ? 0.0 : b2[i] * std::exp(e);
    w[i] = wi;
    r0 += wi;
    r1 += lam[i] * wi;
  }
  *s0 = r0;
  *s1 = r1;
}

double weighted_sqdev_neon(const double* lam, const double* w, double center,
                           std::size_t n) {
  const float64x2_t vc = vdupq_n_f64(center);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(lam + i), vc);
    acc = vfmaq_f64(acc, vmulq_f64(d, d), vld1q_f64(w + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = lam[i] - center;
    s += w[i] * d * d;
  }
  return s;
}

}  // namespace

const Ops& neon() {
  static const Ops ops = {"neon",      dot_neon,          axpy_neon,
                          vexp_neon,   moser_weights_neon,
                          weighted_sqdev_neon};
  return ops;
}

}  // namespace rml::kernels

#endif  // RMLAB_KERNELS_NEON
