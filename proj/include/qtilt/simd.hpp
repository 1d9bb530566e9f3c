#pragma once
// Row kernels for the exact linear algebra layer.
//
// Every kernel has a portable scalar reference implementation; AVX2 (x86-64)
// and NEON (aarch64) variants are compiled when the toolchain supports them and
// selected at runtime from the CPU's capabilities. The environment variable
// QTILT_SIMD=scalar|avx2|neon overrides the choice.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qtilt::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);

struct Kernels {
  Isa isa;
  // dst[i] ^= src[i]
  void (*xor_words)(uint64_t* dst, const uint64_t* src, std::size_t n);
  // dst[i] += c * src[i]  (mod 2^32)
  void (*muladd_wrap)(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n);
};

/// Kernel table in use by the linear algebra layer.
const Kernels& active();

/// Table for a specific ISA, or nullptr when the CPU or build lacks it.
const Kernels* kernels_for(Isa isa);

/// ISAs usable on this machine, scalar first.
std::vector<Isa> available();

/// Switch the active table. Returns false (and changes nothing) if unsupported.
bool set_active(Isa isa);

namespace scalar {
void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n);
void muladd_wrap(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QTILT_HAVE_AVX2_BUILD 1
namespace avx2 {
void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n);
void muladd_wrap(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define QTILT_HAVE_NEON_BUILD 1
namespace neon {
void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n);
void muladd_wrap(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n);
}  // namespace neon
#endif

}  // namespace qtilt::simd
