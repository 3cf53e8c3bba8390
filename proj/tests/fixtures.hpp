#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "posetsym/poset.hpp"

namespace fx {

using posetsym::Poset;

// 1-based relation lists, as they appear in the text format.
inline Poset poset1(int n, std::initializer_list<std::pair<int, int>> rel) {
  std::vector<std::pair<int, int>> zero;
  for (auto [a, b] : rel) zero.emplace_back(a - 1, b - 1);
  return Poset::from_relations(n, zero);
}

inline Poset two_chains() { return poset1(4, {{1, 3}, {2, 4}}); }
inline Poset two_plus_one() { return poset1(3, {{2, 3}}); }
inline Poset ex1() { return poset1(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}}); }
inline Poset kite() { return poset1(4, {{1, 4}, {2, 4}}); }

// Listing from 1-based labels.
inline std::vector<int> listing1(std::initializer_list<int> w) {
  std::vector<int> out;
  for (int v : w) out.push_back(v - 1);
  return out;
}

// Index-set mask from 1-based members.
inline std::uint32_t set1(std::initializer_list<int> members) {
  std::uint32_t m = 0;
  for (int i : members) m |= std::uint32_t{1} << (i - 1);
  return m;
}

}  // namespace fx
