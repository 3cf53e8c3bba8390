#pragma once

#include <string>
#include <vector>

#include "posetsym/arith.hpp"
#include "posetsym/poset.hpp"

namespace posetsym {

// Canonical labelling by individualization/refinement.
//
// Incomparable elements with identical up- and down-sets ("twins") are
// collapsed first; the quotient is labelled by exploring the refinement
// search tree and keeping the lexicographically least relation matrix. Two
// posets are isomorphic iff their keys are equal. Works for every size up to
// kMaxGroundSet; the cost is governed by the automorphism group of the twin
// quotient, which is small for everything this library scans.
struct CanonicalForm {
  // labelling[i] is the canonical label of element i.
  std::vector<int> labelling;
  // Relabelled poset: relabel(p, labelling).
  Poset poset;
  // "<n>:<hex of the row-major strict-order matrix of `poset`>".
  std::string key;
  Integer automorphisms;
};

CanonicalForm canonical_form(const Poset& p);
std::string canonical_key(const Poset& p);
bool is_isomorphic(const Poset& a, const Poset& b);
Integer automorphism_count(const Poset& p);

// Key encoding of an already labelled poset (no canonicalization).
std::string encode_key(const Poset& p);

}  // namespace posetsym
