#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetsym/arith.hpp"
#include "posetsym/poset.hpp"

namespace posetsym {

// Largest ambient n for explicit plucking families (2^(n-1) members).
inline constexpr int kMaxPluckingAmbient = 12;

// Upward-closed nonempty family of subsets of [n-1]. Subsets use the IndexSet
// mask convention: member i is bit i-1.
class Plucking {
 public:
  // Validates: nonempty and upward closed (so it contains [n-1]).
  static Plucking from_members(int n, std::span<const std::uint32_t> members);
  // Upward closure of a nonempty generator list.
  static Plucking generated_by(int n, std::span<const std::uint32_t> generators);
  static Plucking power_set(int n);

  int ambient() const { return n_; }
  int bits() const { return n_ <= 1 ? 0 : n_ - 1; }
  std::uint32_t full_set() const;
  bool contains(std::uint32_t s) const { return s < member_.size() && member_[s] != 0; }
  std::vector<std::uint32_t> members() const;
  std::size_t size() const;
  const std::vector<std::uint8_t>& indicator() const { return member_; }

  bool operator==(const Plucking&) const = default;
  bool operator<(const Plucking& o) const { return n_ != o.n_ ? n_ < o.n_ : member_ < o.member_; }

 private:
  Plucking(int n, std::vector<std::uint8_t> member) : n_(n), member_(std::move(member)) {}
  int n_ = 0;
  std::vector<std::uint8_t> member_;
};

// Family of border-point sets of a listing: every I such that each block of
// comp(I) cut from the listing is a linear extension of its subposet. Throws
// LengthError when the listing length differs from |P|.
Plucking comp_of_listing(const Poset& p, std::span<const int> listing);

std::vector<std::uint32_t> minimal_sets(const Plucking& a);
bool is_complete(const Plucking& a);

// chi_A(S) = sum over T in A with T subset of S of (-1)^{|S|-|T|}. Throws
// NotMember if S is not in A.
std::int64_t chi_at(const Plucking& a, std::uint32_t s);
std::int64_t chi(const Plucking& a);
// The signed subset sum at every S (meaningful for S in A), via the
// dispatched Moebius kernel.
std::vector<std::int64_t> chi_all(const Plucking& a);
// chi_A(S) as the alternating depth sum over the mountain H_A(S), built as
// an explicit poset. Requires |H_A(S)| <= 64.
std::int64_t chi_at_by_depth(const Plucking& a, std::uint32_t s);

// True iff S has an element outside the union of the minimal sets (then
// chi_at(A, S) = 0). Throws NotMember.
bool vanishing_check(const Plucking& a, std::uint32_t s);

// Listings whose plucking is complete, in lexicographic order.
std::vector<Listing> reversing_listings(const Poset& p);
// Sum of chi(Comp(P, w)) over reversing listings w.
std::int64_t zeta1(const Poset& p);

// Poset with a unique maximal element and its f-vector (elements counted by
// depth, the length of a longest chain up to the top).
class Mountain {
 public:
  // Throws std::invalid_argument unless there is exactly one maximal element.
  explicit Mountain(Poset p);
  const Poset& poset() const { return poset_; }
  const std::vector<std::int64_t>& f_vector() const { return f_vector_; }
  int depth(int element) const { return depth_[element]; }
  int top() const { return top_; }

 private:
  Poset poset_;
  std::vector<int> depth_;
  std::vector<std::int64_t> f_vector_;
  int top_ = 0;
};

// A ordered by inclusion; members are labelled in increasing mask order.
// Throws SizeError beyond 64 members.
Mountain mountain_from_plucking(const Plucking& a);
std::vector<std::int64_t> f_vector(const Mountain& m);
// Sum over elements of (-1)^depth.
std::int64_t chi_mountain(const Mountain& m);
std::int64_t chi_from_fvector(std::span<const std::int64_t> f);

// Formal integer combination of isomorphism classes of mountains.
class MountainSum {
 public:
  struct Entry {
    Mountain representative;
    Integer multiplicity;
  };

  void add(const Mountain& m, const Integer& multiplicity = 1);
  const std::map<std::string, Entry>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer total_multiplicity() const;
  // Sum of multiplicity times chi of the class.
  Integer chi() const;
  bool operator==(const MountainSum& o) const;

  // Bilinear extension of the Cartesian product of classes.
  friend MountainSum operator*(const MountainSum& a, const MountainSum& b);

 private:
  std::map<std::string, Entry> terms_;
};

// Sum of the classes of Comp(P, w) over reversing listings w.
MountainSum phi(const Poset& p);

// {w : S in Comp(P, w)} equals {reverse(w) : S^op in Comp(P*, w)}.
bool comp_duality_check(const Poset& p, std::uint32_t s);

// Necessary conditions for A = Comp(P, w): a minimal set containing {1, 2}
// forces 1 into every minimal set; {n-2, n-1} forces n-1; {l-1, l, l+1}
// forces l for 2 <= l <= n-2.
bool realizability_necessary(const Plucking& a);

nlohmann::json to_json(const MountainSum& sum);
nlohmann::json to_json(const Plucking& a);

}  // namespace posetsym
