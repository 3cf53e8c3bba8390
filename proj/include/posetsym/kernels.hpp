#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace posetsym::kernels {

// In-place transforms over arrays of length 2^bits indexed by subset masks:
//   zeta:   a[S] <- sum over T subset of S of a[T]
//   mobius: a[S] <- sum over T subset of S of (-1)^|S \ T| a[T]
// Every intermediate value is a signed sub-sum of the input, so the caller
// only has to guarantee sum |a[i]| <= INT64_MAX.
struct SubsetTransforms {
  const char* name;
  void (*zeta)(std::int64_t* data, int bits);
  void (*mobius)(std::int64_t* data, int bits);
};

const SubsetTransforms& scalar_transforms();
// nullptr unless the AVX2 unit was compiled in and the CPU reports AVX2.
const SubsetTransforms* avx2_transforms();
// AVX2 when available, scalar otherwise or when POSETSYM_FORCE_SCALAR is set
// to a non-empty value other than "0". Chosen once per process.
const SubsetTransforms& active_transforms();

// Dispatching entry points; data.size() must be a power of two.
void subset_zeta(std::span<std::int64_t> data);
void subset_mobius(std::span<std::int64_t> data);

// True when sum |a[i]| fits in int64, i.e. the transforms cannot overflow.
bool fits_transform_bound(std::span<const std::int64_t> data);

// Reference versions for any ring element type (used for exact rationals).
template <class T>
void subset_zeta_generic(std::vector<T>& a) {
  for (std::size_t step = 1; step < a.size(); step <<= 1) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (s & step) a[s] += a[s ^ step];
    }
  }
}

template <class T>
void subset_mobius_generic(std::vector<T>& a) {
  for (std::size_t step = 1; step < a.size(); step <<= 1) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (s & step) a[s] -= a[s ^ step];
    }
  }
}

}  // namespace posetsym::kernels
