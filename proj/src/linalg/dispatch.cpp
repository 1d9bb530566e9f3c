#include <atomic>
#include <cstdlib>
#include <cstring>

#include "qtilt/simd.hpp"

namespace qtilt::simd {
namespace {

constexpr Kernels kScalar{Isa::Scalar, &scalar::xor_words, &scalar::muladd_wrap};
#ifdef QTILT_HAVE_AVX2_BUILD
constexpr Kernels kAvx2{Isa::Avx2, &avx2::xor_words, &avx2::muladd_wrap};
#endif
#ifdef QTILT_HAVE_NEON_BUILD
constexpr Kernels kNeon{Isa::Neon, &neon::xor_words, &neon::muladd_wrap};
#endif

const Kernels* detect() {
  if (const char* env = std::getenv("QTILT_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return &kScalar;
    if (std::strcmp(env, "avx2") == 0 && kernels_for(Isa::Avx2)) return kernels_for(Isa::Avx2);
    if (std::strcmp(env, "neon") == 0 && kernels_for(Isa::Neon)) return kernels_for(Isa::Neon);
  }
  if (const Kernels* k = kernels_for(Isa::Avx2)) return k;
  if (const Kernels* k = kernels_for(Isa::Neon)) return k;
  return &kScalar;
}

std::atomic<const Kernels*>& slot() {
  static std::atomic<const Kernels*> current{detect()};
  return current;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const Kernels* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalar;
    case Isa::Avx2:
#ifdef QTILT_HAVE_AVX2_BUILD
      if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
      return nullptr;
    case Isa::Neon:
#ifdef QTILT_HAVE_NEON_BUILD
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (kernels_for(isa)) out.push_back(isa);
  }
  return out;
}

const Kernels& active() { return *slot().load(std::memory_order_relaxed); }

bool set_active(Isa isa) {
  const Kernels* k = kernels_for(isa);
  if (!k) return false;
  slot().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace qtilt::simd
