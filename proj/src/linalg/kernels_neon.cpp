#include "qtilt/simd.hpp"

#ifdef QTILT_HAVE_NEON_BUILD
#include <arm_neon.h>

namespace qtilt::simd::neon {

void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void muladd_wrap(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_u32(dst + i, vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), c));
  }
  for (; i < n; ++i) dst[i] += c * src[i];
}

}  // namespace qtilt::simd::neon
#endif
