#pragma once

#include <cstddef>
#include <vector>

// Data-parallel inner loops used by the hot paths: Moser weight sums (toda),
// Householder sweeps (linalg), lattice bond forces, CG matvecs. Each kernel
// has a scalar reference implementation and, where the build targets support
// it, an AVX2 or NEON variant selected once at startup. Variants are
// equivalence-tested against the scalar reference.
namespace rml::kernels {

struct Ops {
  const char* name;

  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // y[i] = exp(x[i]).  Contract: matches libm exp to a few ulp on
  // [-708.39, 709.4]; returns 0 below that range and +inf above it
  // (subnormal outputs flush to zero).
  void (*vexp)(const double* x, double* y, std::size_t n);

  // w[j] = b2[j] * exp(2 t (lam[j] - shift)); s0 = sum w, s1 = sum lam*w.
  // With shift = max lam the exponents are <= 0, so no overflow for any t.
  void (*moser_weights)(const double* lam, const double* b2, double t,
                        double shift, double* w, std::size_t n, double* s0,
                        double* s1);

  // sum_j w[j] * (lam[j] - center)^2  (all terms nonnegative; no cancellation)
  double (*weighted_sqdev)(const double* lam, const double* w, double center,
                           std::size_t n);
};

enum class Isa { scalar, avx2, neon };

const Ops& scalar();
const Ops& active();
Isa active_isa();

// Every variant compiled into this binary and usable on this machine,
// scalar first. Tests walk this list for equivalence checks.
const std::vector<const Ops*>& available();

#if defined(RMLAB_KERNELS_AVX2)
const Ops& avx2();     // valid only if cpu_has_avx2()
bool cpu_has_avx2();
#endif
#if defined(RMLAB_KERNELS_NEON)
const Ops& neon();
#endif

}  // namespace rml::kernels
