#include "kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace rml::kernels {
namespace {

const Ops* select() {
  // RMLAB_KERNELS=scalar forces the reference path (used by equivalence
  // tests and when bisecting numerical differences).
  if (const char* env = std::getenv("RMLAB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar();
  }
#if defined(RMLAB_KERNELS_AVX2)
  if (cpu_has_avx2()) return &avx2();
#endif
#if defined(RMLAB_KERNELS_NEON)
  return &neon();
#endif
  return &scalar();
}

}  // namespace

const Ops& active() {
  static const Ops* ops = select();
  return *ops;
}

Isa active_isa() {
#if defined(RMLAB_KERNELS_AVX2)
  if (&active() == &avx2()) return Isa::avx2;
#endif
#if defined(RMLAB_KERNELS_NEON)
  if (&active() == &neon()) return Isa::neon;
#endif
  return Isa::scalar;
}

const std::vector<const Ops*>& available() {
  static const std::vector<const Ops*> list = [] {
    std::vector<const Ops*> v{&scalar()};
#if defined(RMLAB_KERNELS_AVX2)
    if (cpu_has_avx2()) v.push_back(&avx2());
#endif
#if defined(RMLAB_KERNELS_NEON)
    v.push_back(&neon());
#endif
    return v;
  }();
  return list;
}

}  // namespace rml::kernels
