#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace posetsym {

// Subset of the ground set: bit i is element i (0-based).
using Mask = std::uint64_t;

// A listing is a permutation of {0, ..., n-1}; entry k is the element placed
// at position k.
using Listing = std::vector<int>;

inline constexpr int kMaxGroundSet = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline int popcount(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

class Graph;

// Finite strict partial order on {0, ..., n-1}. Every relation is stored
// explicitly: up(i) holds all j with i < j and down(i) all j with j < i.
class Poset {
 public:
  Poset() = default;

  // Transitive closure of `relations` (0-based pairs (i, j) meaning i < j).
  // Throws IndexError on labels outside [0, n), CycleError if the closure is
  // not antisymmetric (including i < i).
  static Poset from_relations(int n, std::span<const std::pair<int, int>> relations);
  static Poset from_relations(int n, std::initializer_list<std::pair<int, int>> relations) {
    return from_relations(n, std::span<const std::pair<int, int>>(relations.begin(), relations.size()));
  }
  // Takes already transitively closed up-sets; validates the order axioms.
  static Poset from_up_sets(std::vector<Mask> up);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }
  bool less(int i, int j) const { return (up_[i] >> j) & 1U; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  Mask up(int i) const { return up_[i]; }
  Mask down(int i) const { return down_[i]; }
  Mask ground() const { return full_mask(size()); }
  Mask minimal_elements() const;
  Mask maximal_elements() const;
  int relation_count() const;

  bool operator==(const Poset&) const = default;

 private:
  explicit Poset(std::vector<Mask> up);
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

// Digraph on {0, ..., n-1}; out(i) holds every j with an edge (i, j).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : out_(static_cast<std::size_t>(n), 0) {}
  static Digraph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Digraph of_poset(const Poset& p);

  int size() const { return static_cast<int>(out_.size()); }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const { return (out_[from] >> to) & 1U; }
  Mask out(int i) const { return out_[i]; }
  Mask in(int i) const;
  int edge_count() const;

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<Mask> out_;
};

// Simple undirected graph on {0, ..., n-1}.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n), 0) {}
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int size() const { return static_cast<int>(adj_.size()); }
  void add_edge(int a, int b);
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1U; }
  Mask neighbours(int a) const { return adj_[a]; }
  int edge_count() const;
  bool is_clique(Mask vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Mask> adj_;
};

Poset dual(const Poset& p);
// Restriction to `subset`, relabelled by the order-preserving bijection
// subset -> {0, ..., |subset|-1}.
Poset restrict_standardize(const Poset& p, Mask subset);
Poset ordinal_sum(const Poset& lower, const Poset& upper);
Poset disjoint_union(const Poset& a, const Poset& b);
// Componentwise order on pairs; (a, b) gets label a * |q| + b.
Poset cartesian_product(const Poset& p, const Poset& q);
// Apply a relabelling: element i of `p` becomes perm[i].
Poset relabel(const Poset& p, std::span<const int> perm);

// All linear extensions in lexicographic order.
std::vector<Listing> linear_extensions(const Poset& p);
// Number of linear extensions; 1 for the empty poset.
std::uint64_t zeta(const Poset& p);
// zeta of the induced subposet on every subset of the ground set, indexed by
// mask. Requires size() <= 24.
std::vector<std::uint64_t> zeta_of_all_subsets(const Poset& p);

// Throws LengthError if the listing length differs from |P| and
// std::invalid_argument if it is not a permutation.
bool is_linear_extension(const Poset& p, std::span<const int> listing);

Graph incomparability_graph(const Poset& p);

// An induced copy of C_a + C_b: the two chains as bottom-to-top element lists.
struct TwoChainWitness {
  std::vector<int> first;
  std::vector<int> second;
};
std::optional<TwoChainWitness> find_two_chains(const Poset& p, int a, int b);
bool is_ab_free(const Poset& p, int a, int b);

// Unique maximal ordinal-sum factorization; each factor is irreducible.
std::vector<Poset> irreducible_factorization(const Poset& p);
// Ground-set blocks of the factorization, bottom factor first.
std::vector<Mask> factor_blocks(const Poset& p);
bool is_irreducible(const Poset& p);

// Number of elements in a longest chain (0 for the empty poset).
int longest_chain_size(const Poset& p);
// Size of a largest antichain.
int largest_antichain_size(const Poset& p);

Digraph transitive_closure(const Digraph& d);
bool is_acyclic(const Digraph& d);
// Listings with no i < j such that (w_j, w_i) is an edge. A loop (v, v) can
// never be satisfied, so any loop gives 0.
std::uint64_t zeta_digraph(const Digraph& d);
// Requires an acyclic digraph; throws CycleError otherwise.
Poset poset_of_digraph(const Digraph& d);

}  // namespace posetsym
