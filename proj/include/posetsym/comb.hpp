#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "posetsym/poset.hpp"

namespace posetsym {

// Sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  // Number of parts equal to `value`.
  int multiplicity(int value) const;
  Composition as_composition() const { return Composition(parts_); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Subset of [n-1] = {1, ..., n-1}; member i is bit i-1 of `members`.
struct IndexSet {
  int n = 0;
  std::uint32_t members = 0;

  bool contains(int i) const { return i >= 1 && i < n && ((members >> (i - 1)) & 1U); }
  int size() const { return popcount(members); }
  std::vector<int> elements() const;
  static IndexSet of(int n, std::initializer_list<int> elements);
  static IndexSet full(int n);

  auto operator<=>(const IndexSet&) const = default;
};

// Largest weight handled by the bitmask encodings of compositions.
inline constexpr int kMaxWeight = 31;

inline std::uint32_t full_index_mask(int n) {
  return n <= 1 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << (n - 1)) - 1);
}

IndexSet set_of(const Composition& alpha);
Composition comp_of(const IndexSet& set);
// Composition of n whose partial sums are the members of `mask`.
Composition comp_of_mask(int n, std::uint32_t mask);

// alpha is finer than beta: set(beta) is contained in set(alpha). Throws
// WeightError when the weights differ.
bool refines(const Composition& alpha, const Composition& beta);

Composition opposite(const Composition& alpha);
IndexSet opposite_set(const IndexSet& set);
std::uint32_t opposite_mask(int n, std::uint32_t mask);
Listing reverse(const Listing& listing);

// All compositions of n in reverse-lexicographic order of their parts.
std::vector<Composition> compositions(int n);
// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions(int n);
Partition sort_to_partition(const Composition& alpha);

// Ordered set partitions of `ground` (a subset of {0, ..., 63}); each block
// is a mask. Blocks are chosen first by decreasing size, then by mask.
std::vector<std::vector<Mask>> set_compositions(Mask ground);

// Type of a set composition.
Composition type_of(const std::vector<Mask>& blocks);

}  // namespace posetsym
