#include <atomic>

#include "mkp/kernels.hpp"

namespace mkp::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, detail::maxplus_scalar, detail::shift_add_scalar};
#if defined(MKP_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::avx2, detail::maxplus_avx2, detail::shift_add_avx2};
#endif
#if defined(MKP_HAVE_NEON_TU)
constexpr KernelTable kNeon{Isa::neon, detail::maxplus_neon, detail::shift_add_neon};
#endif

// -1: auto-detect; otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

const KernelTable& detect() noexcept {
  static const KernelTable& best = []() -> const KernelTable& {
    if (isa_available(Isa::avx2)) return table_for(Isa::avx2);
    if (isa_available(Isa::neon)) return table_for(Isa::neon);
    return kScalar;
  }();
  return best;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(MKP_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(MKP_HAVE_NEON_TU)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Isa isa) noexcept {
  if (!isa_available(isa)) return kScalar;
  switch (isa) {
#if defined(MKP_HAVE_AVX2_TU)
    case Isa::avx2:
      return kAvx2;
#endif
#if defined(MKP_HAVE_NEON_TU)
    case Isa::neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

const KernelTable& active() noexcept {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return table_for(static_cast<Isa>(forced));
  return detect();
}

void force_isa(std::optional<Isa> isa) noexcept {
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

}  // namespace mkp::kernels
