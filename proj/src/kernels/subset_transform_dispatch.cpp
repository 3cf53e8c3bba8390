#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string_view>

#include "posetsym/kernels.hpp"

namespace posetsym::kernels {

#if defined(POSETSYM_BUILD_AVX2)
const SubsetTransforms& avx2_transform_table();
#endif

const SubsetTransforms* avx2_transforms() {
#if defined(POSETSYM_BUILD_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &avx2_transform_table() : nullptr;
#else
  return nullptr;
#endif
}

const SubsetTransforms& active_transforms() {
  static const SubsetTransforms& chosen = []() -> const SubsetTransforms& {
    const char* force = std::getenv("POSETSYM_FORCE_SCALAR");
    const bool scalar_only = force != nullptr && *force != '\0' && std::string_view(force) != "0";
    if (!scalar_only) {
      if (const SubsetTransforms* fast = avx2_transforms()) return *fast;
    }
    return scalar_transforms();
  }();
  return chosen;
}

namespace {

int log2_size(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("subset transform needs a power-of-two length");
  }
  return std::countr_zero(size);
}

}  // namespace

void subset_zeta(std::span<std::int64_t> data) { active_transforms().zeta(data.data(), log2_size(data.size())); }

void subset_mobius(std::span<std::int64_t> data) {
  active_transforms().mobius(data.data(), log2_size(data.size()));
}

bool fits_transform_bound(std::span<const std::int64_t> data) {
  std::uint64_t total = 0;
  for (std::int64_t x : data) {
    if (x == std::numeric_limits<std::int64_t>::min()) return false;
    const auto mag = static_cast<std::uint64_t>(x < 0 ? -x : x);
    if (__builtin_add_overflow(total, mag, &total)) return false;
  }
  return total <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
}

}  // namespace posetsym::kernels
