// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "posetsym/kernels.hpp"

namespace posetsym::kernels {

namespace {

// Butterflies with stride 1 and 2 stay inside one 4-lane register: permute
// the low half of each pair onto the high half, mask, then add or subtract.
template <bool Subtract>
inline __m256i combine(__m256i acc, __m256i term) {
  if constexpr (Subtract) {
    return _mm256_sub_epi64(acc, term);
  } else {
    return _mm256_add_epi64(acc, term);
  }
}

template <bool Subtract>
void transform_avx2(std::int64_t* a, int bits) {
  const std::size_t size = std::size_t{1} << bits;
  if (bits < 2) {
    for (std::size_t step = 1; step < size; step <<= 1) {
      for (std::size_t base = 0; base < size; base += 2 * step) {
        for (std::size_t k = 0; k < step; ++k) {
          a[base + step + k] = Subtract ? a[base + step + k] - a[base + k] : a[base + step + k] + a[base + k];
        }
      }
    }
    return;
  }

  const __m256i odd_lanes = _mm256_setr_epi64x(0, -1, 0, -1);
  const __m256i high_pair = _mm256_setr_epi64x(0, 0, -1, -1);
  for (std::size_t i = 0; i < size; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    // step 1: lanes (1, 3) take lanes (0, 2)
    __m256i lo = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(2, 2, 0, 0));
    v = combine<Subtract>(v, _mm256_and_si256(lo, odd_lanes));
    // step 2: lanes (2, 3) take lanes (0, 1)
    lo = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(1, 0, 1, 0));
    v = combine<Subtract>(v, _mm256_and_si256(lo, high_pair));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), v);
  }

  for (std::size_t step = 4; step < size; step <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * step) {
      std::int64_t* low = a + base;
      std::int64_t* high = a + base + step;
      for (std::size_t k = 0; k < step; k += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(low + k));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(high + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(high + k), combine<Subtract>(y, x));
      }
    }
  }
}

void zeta_avx2(std::int64_t* a, int bits) { transform_avx2<false>(a, bits); }
void mobius_avx2(std::int64_t* a, int bits) { transform_avx2<true>(a, bits); }

}  // namespace

const SubsetTransforms& avx2_transform_table() {
  static const SubsetTransforms kAvx2{"avx2", &zeta_avx2, &mobius_avx2};
  return kAvx2;
}

}  // namespace posetsym::kernels
