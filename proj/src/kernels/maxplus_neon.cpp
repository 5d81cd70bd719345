#include <arm_neon.h>

#include "mkp/kernels.hpp"

namespace mkp::kernels::detail {

void maxplus_neon(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                  std::int64_t add, std::uint16_t code) {
  const int64x2_t vadd = vdupq_n_s64(add);
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    const int64x2_t d = vld1q_s64(dst + j);
    const int64x2_t c = vaddq_s64(vld1q_s64(src + j), vadd);
    const uint64x2_t gt = vcgtq_s64(c, d);
    const std::uint64_t lo = vgetq_lane_u64(gt, 0), hi = vgetq_lane_u64(gt, 1);
    if ((lo | hi) == 0) continue;
    vst1q_s64(dst + j, vbslq_s64(gt, c, d));
    if (lo) choice[j] = code;
    if (hi) choice[j + 1] = code;
  }
  maxplus_scalar(dst + j, choice + j, src + j, len - j, add, code);
}

void shift_add_neon(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                    std::int64_t add, std::uint16_t code) {
  const int64x2_t vadd = vdupq_n_s64(add);
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    vst1q_s64(dst + j, vaddq_s64(vld1q_s64(src + j), vadd));
    choice[j] = code;
    choice[j + 1] = code;
  }
  shift_add_scalar(dst + j, choice + j, src + j, len - j, add, code);
}

}  // namespace mkp::kernels::detail
