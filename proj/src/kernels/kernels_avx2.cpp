// AVX2+FMA variants. Compiled with -mavx2 -mfma; only dispatched when the CPU
// reports both (see dispatch.cpp).

#include "kernels/kernels.hpp"

#if defined(RMLAB_KERNELS_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace rml::kernels {
namespace {

// exp(x), 4 lanes, Cephes-style: x = n ln2 + r, e^r by a degree-(2,3)
// rational, scale by 2^n in two halves so the exponent field never
// overflows. Subnormal results flush to zero (cutoff at -708.39).
inline __m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);

  const __m256d lo_cut = _mm256_set1_pd(-708.39);
  const __m256d hi_cut = _mm256_set1_pd(709.782712893384);
  const __m256d zero_mask = _mm256_cmp_pd(x, lo_cut, _CMP_LT_OQ);
  const __m256d inf_mask = _mm256_cmp_pd(x, hi_cut, _CMP_GT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo_cut), hi_cut);

  const __m256d nd =
      _mm256_round_pd(_mm256_mul_pd(x, log2e),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  // r = x - n*ln2 in two pieces for accuracy
  __m256d r = _mm256_fnmadd_pd(nd, c1, x);
  r = _mm256_fnmadd_pd(nd, c2, r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d px = _mm256_fmadd_pd(p0, rr, p1);
  px = _mm256_fmadd_pd(px, rr, p2);
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_fmadd_pd(q0, rr, q1);
  qx = _mm256_fmadd_pd(qx, rr, q2);
  qx = _mm256_fmadd_pd(qx, rr, q3);
  const __m256d er =
      _mm256_fmadd_pd(two, _mm256_div_pd(px, _mm256_sub_pd(qx, px)), one);

  // 2^n = 2^ka * 2^kb, ka = n>>1 (arithmetic), kb = n - ka: both exponent
  // fields stay in range even at n = 1024 or n = -1022.
  const __m128i n32 = _mm256_cvtpd_epi32(nd);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), n64);
  const __m256i ka =
      _mm256_or_si256(_mm256_srli_epi64(n64, 1),
                      _mm256_and_si256(neg, _mm256_set1_epi64x(
                                                static_cast<long long>(1ULL << 63))));
  const __m256i kb = _mm256_sub_epi64(n64, ka);
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256d f1 = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_add_epi64(ka, bias), 52));
  const __m256d f2 = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_add_epi64(kb, bias), 52));

  __m256d y = _mm256_mul_pd(_mm256_mul_pd(er, f1), f2);
  y = _mm256_andnot_pd(zero_mask, y);
  y = _mm256_blendv_pd(y, _mm256_set1_pd(HUGE_VAL), inf_mask);
  return y;
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4),
                                                _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void vexp_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, exp4(_mm256_loadu_pd(x + i)));
  }
  if (i < n) {
    alignas(32) double in[4] = {0, 0, 0, 0};
    alignas(32) double out[4];
    for (std::size_t k = i; k < n; ++k) in[k - i] = x[k];
    _mm256_store_pd(out, exp4(_mm256_load_pd(in)));
    for (std::size_t k = i; k < n; ++k) y[k] = out[k - i];
  }
}

void moser_weights_avx2(const double* lam, const double* b2, double t,
                        double shift, double* w, std::size_t n, double* s0,
                        double* s1) {
  const __m256d two_t = _mm256_set1_pd(2.0 * t);
  const __m256d vshift = _mm256_set1_pd(shift);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vl = _mm256_loadu_pd(lam + i);
    const __m256d e = _mm256_mul_pd(two_t, _mm256_sub_pd(vl, vshift));
    const __m256d vw = _mm256_mul_pd(_mm256_loadu_pd(b2 + i), exp4(e));
    _mm256_storeu_pd(w + i, vw);
    acc0 = _mm256_add_pd(acc0, vw);
    acc1 = _mm256_fmadd_pd(vl, vw, acc1);
  }
  double r0 = hsum(acc0);
  double r1 = hsum(acc1);
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

double weighted_sqdev_avx2(const double* lam, const double* w, double center,
                           std::size_t n) {
  const __m256d vc = _mm256_set1_pd(center);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(lam + i), vc);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(d, d), _mm256_loadu_pd(w + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = lam[i] - center;
    s += w[i] * d * d;
  }
  return s;
}

}  // namespace

const Ops& avx2() {
  static const Ops ops = {"avx2",      dot_avx2,          axpy_avx2,
                          vexp_avx2,   moser_weights_avx2,
                          weighted_sqdev_avx2};
  return ops;
}

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace rml::kernels

#endif  // RMLAB_KERNELS_AVX2
