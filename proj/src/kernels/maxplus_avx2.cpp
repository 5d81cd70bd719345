// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "mkp/kernels.hpp"

namespace mkp::kernels::detail {

void maxplus_avx2(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                  std::int64_t add, std::uint16_t code) {
  const __m256i vadd = _mm256_set1_epi64x(add);
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
    const __m256i c = _mm256_add_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j)), vadd);
    const __m256i gt = _mm256_cmpgt_epi64(c, d);
    const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(gt));
    if (bits == 0) continue;
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_blendv_epi8(d, c, gt));
    if (bits & 1) choice[j] = code;
    if (bits & 2) choice[j + 1] = code;
    if (bits & 4) choice[j + 2] = code;
    if (bits & 8) choice[j + 3] = code;
  }
  maxplus_scalar(dst + j, choice + j, src + j, len - j, add, code);
}

void shift_add_avx2(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                    std::int64_t add, std::uint16_t code) {
  const __m256i vadd = _mm256_set1_epi64x(add);
  const __m128i vcode = _mm_set1_epi16(static_cast<short>(code));
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_add_epi64(s, vadd));
    _mm_storel_epi64(reinterpret_cast<__m128i*>(choice + j), vcode);
  }
  shift_add_scalar(dst + j, choice + j, src + j, len - j, add, code);
}

}  // namespace mkp::kernels::detail
