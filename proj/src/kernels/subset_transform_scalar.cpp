#include "posetsym/kernels.hpp"

namespace posetsym::kernels {

namespace {

void zeta_scalar(std::int64_t* a, int bits) {
  const std::size_t size = std::size_t{1} << bits;
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * step) {
      for (std::size_t k = 0; k < step; ++k) a[base + step + k] += a[base + k];
    }
  }
}

void mobius_scalar(std::int64_t* a, int bits) {
  const std::size_t size = std::size_t{1} << bits;
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * step) {
      for (std::size_t k = 0; k < step; ++k) a[base + step + k] -= a[base + k];
    }
  }
}

}  // namespace

const SubsetTransforms& scalar_transforms() {
  static const SubsetTransforms kScalar{"scalar", &zeta_scalar, &mobius_scalar};
  return kScalar;
}

}  // namespace posetsym::kernels
