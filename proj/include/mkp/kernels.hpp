#pragma once

// Inner loops of the capacity-vector dynamic program.
//
// Each kernel exists as a portable scalar reference and as SIMD variants
// (AVX2 on x86-64, NEON on AArch64). The variant is picked once at runtime
// from the host's CPU features; all variants produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace mkp::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// For every j < len: candidate = src[j] + add; if candidate > dst[j]
/// (strictly), dst[j] = candidate and choice[j] = code.
using MaxPlusFn = void (*)(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                           std::int64_t add, std::uint16_t code);

/// dst[j] = src[j] + add and choice[j] = code for every j < len.
using ShiftAddFn = void (*)(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                            std::int64_t add, std::uint16_t code);

struct KernelTable {
  Isa isa;
  MaxPlusFn maxplus;
  ShiftAddFn shift_add;
};

/// True when the variant is compiled in and the CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Table for a specific variant; falls back to scalar when unavailable.
const KernelTable& table_for(Isa isa) noexcept;

/// Table used by the solvers: the best available variant, unless a
/// variant was forced with force_isa().
const KernelTable& active() noexcept;

/// Pins the solvers to one variant (std::nullopt restores auto-detection).
/// Intended for equivalence tests and benchmarking.
void force_isa(std::optional<Isa> isa) noexcept;

namespace detail {
void maxplus_scalar(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                    std::int64_t add, std::uint16_t code);
void shift_add_scalar(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                      std::int64_t add, std::uint16_t code);
#if defined(MKP_HAVE_AVX2_TU)
void maxplus_avx2(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                  std::int64_t add, std::uint16_t code);
void shift_add_avx2(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                    std::int64_t add, std::uint16_t code);
#endif
#if defined(MKP_HAVE_NEON_TU)
void maxplus_neon(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                  std::int64_t add, std::uint16_t code);
void shift_add_neon(std::int64_t* dst, std::uint16_t* choice, const std::int64_t* src, std::size_t len,
                    std::int64_t add, std::uint16_t code);
#endif
}  // namespace detail

}  // namespace mkp::kernels
