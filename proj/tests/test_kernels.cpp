#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "gen.hpp"
#include "posetsym/kernels.hpp"

using namespace posetsym;

namespace {

std::vector<std::int64_t> random_array(gen::Rng& rng, int bits) {
  std::vector<std::int64_t> a(std::size_t{1} << bits);
  for (auto& x : a) x = rng.between(-1000, 1000);
  return a;
}

}  // namespace

TEST_CASE("scalar transforms match the generic reference") {
  gen::Rng rng(99);
  const auto& scalar = kernels::scalar_transforms();
  for (int bits = 0; bits <= 12; ++bits) {
    auto a = random_array(rng, bits);
    auto ref = a;
    scalar.zeta(a.data(), bits);
    kernels::subset_zeta_generic(ref);
    CHECK(a == ref);
    scalar.mobius(a.data(), bits);
    kernels::subset_mobius_generic(ref);
    CHECK(a == ref);
  }
}

TEST_CASE("AVX2 transforms agree with scalar ones") {
  const auto* simd = kernels::avx2_transforms();
  if (simd == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
    return;
  }
  gen::Rng rng(7);
  const auto& scalar = kernels::scalar_transforms();
  for (int bits = 0; bits <= 14; ++bits) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto a = random_array(rng, bits);
      auto x = a;
      auto y = a;
      scalar.zeta(x.data(), bits);
      simd->zeta(y.data(), bits);
      CHECK(x == y);
      x = a;
      y = a;
      scalar.mobius(x.data(), bits);
      simd->mobius(y.data(), bits);
      CHECK(x == y);
    }
  }
}

TEST_CASE("dispatched transforms invert each other") {
  gen::Rng rng(1);
  for (int bits = 0; bits <= 10; ++bits) {
    const auto a = random_array(rng, bits);
    auto b = a;
    kernels::subset_zeta(b);
    kernels::subset_mobius(b);
    CHECK(b == a);
  }
  std::vector<std::int64_t> bad(3, 0);
  CHECK_THROWS(kernels::subset_zeta(bad));
}

TEST_CASE("overflow bound") {
  std::vector<std::int64_t> a{INT64_MAX / 2, INT64_MAX / 2};
  CHECK(kernels::fits_transform_bound(a));
  a.push_back(INT64_MAX / 2);
  a.push_back(0);
  CHECK_FALSE(kernels::fits_transform_bound(a));
}
