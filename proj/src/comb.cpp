#include "posetsym/comb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "posetsym/error.hpp"

namespace posetsym {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }
Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

IndexSet IndexSet::of(int n, std::initializer_list<int> elements) {
  IndexSet s{n, 0};
  for (int i : elements) {
    if (i < 1 || i >= n) throw IndexError("index " + std::to_string(i) + " outside [1, n-1]");
    s.members |= 1U << (i - 1);
  }
  return s;
}

IndexSet IndexSet::full(int n) { return IndexSet{n, full_index_mask(n)}; }

IndexSet set_of(const Composition& alpha) {
  const int n = alpha.weight();
  if (n > kMaxWeight) throw SizeError("composition weight exceeds 31");
  IndexSet s{n, 0};
  int partial = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    partial += alpha[i];
    s.members |= 1U << (partial - 1);
  }
  return s;
}

Composition comp_of_mask(int n, std::uint32_t mask) {
  if (n == 0) return Composition{};
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < n; ++i) {
    if ((mask >> (i - 1)) & 1U) {
      parts.push_back(i - last);
      last = i;
    }
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

Composition comp_of(const IndexSet& set) { return comp_of_mask(set.n, set.members); }

bool refines(const Composition& alpha, const Composition& beta) {
  if (alpha.weight() != beta.weight()) {
    throw WeightError("refinement compares compositions of different weights");
  }
  const auto a = set_of(alpha).members;
  const auto b = set_of(beta).members;
  return (b & ~a) == 0;
}

Composition opposite(const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  std::reverse(parts.begin(), parts.end());
  return Composition(std::move(parts));
}

std::uint32_t opposite_mask(int n, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int i = 1; i < n; ++i) {
    if ((mask >> (i - 1)) & 1U) out |= 1U << (n - i - 1);
  }
  return out;
}

IndexSet opposite_set(const IndexSet& set) { return IndexSet{set.n, opposite_mask(set.n, set.members)}; }

Listing reverse(const Listing& listing) { return Listing(listing.rbegin(), listing.rend()); }

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Composition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int first = remaining; first >= 1; --first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int first = std::min(remaining, cap); first >= 1; --first) {
      parts.push_back(first);
      self(self, remaining - first, first);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<std::vector<Mask>> set_compositions(Mask ground) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> blocks;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (rest == 0) {
      out.push_back(blocks);
      return;
    }
    std::vector<Mask> firsts;
    for (Mask sub = rest; sub != 0; sub = (sub - 1) & rest) firsts.push_back(sub);
    std::sort(firsts.begin(), firsts.end(), [](Mask a, Mask b) {
      if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
      return a < b;
    });
    for (Mask first : firsts) {
      blocks.push_back(first);
      self(self, rest & ~first);
      blocks.pop_back();
    }
  };
  rec(rec, ground);
  return out;
}

Composition type_of(const std::vector<Mask>& blocks) {
  std::vector<int> parts;
  parts.reserve(blocks.size());
  for (Mask b : blocks) parts.push_back(popcount(b));
  return Composition(std::move(parts));
}

}  // namespace posetsym
