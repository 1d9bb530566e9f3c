#include "qtilt/simd.hpp"

namespace qtilt::simd::scalar {

void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void muladd_wrap(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += c * src[i];
}

}  // namespace qtilt::simd::scalar
