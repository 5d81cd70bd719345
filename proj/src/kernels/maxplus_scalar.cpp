#include "mkp/kernels.hpp"

namespace mkp::kernels::detail {

void maxplus_scalar(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                    std::int64_t add, std::uint16_t code) {
  for (std::size_t j = 0; j < len; ++j) {
    const std::int64_t cand = src[j] + add;
    if (cand > dst[j]) {
      dst[j] = cand;
      choice[j] = code;
    }
  }
}

void shift_add_scalar(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                      std::int64_t add, std::uint16_t code) {
  for (std::size_t j = 0; j < len; ++j) {
    dst[j] = src[j] + add;
    choice[j] = code;
  }
}

}  // namespace mkp::kernels::detail
