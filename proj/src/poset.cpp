#include "posetsym/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "posetsym/error.hpp"

namespace posetsym {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw SizeError("ground set size " + std::to_string(n) + " outside [0, 64]");
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("linear extension count overflows 64 bits");
  return r;
}

// Warshall over bitset rows.
void close_transitively(std::vector<Mask>& out) {
  const int n = static_cast<int>(out.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((out[i] >> k) & 1U) out[i] |= out[k];
    }
  }
}

}  // namespace

NotSymmetric::NotSymmetric(std::vector<int> a, std::vector<int> b)
    : std::domain_error("element is not symmetric"), first(std::move(a)), second(std::move(b)) {}

NotApplicable::NotApplicable(const std::string& what, std::vector<int> w)
    : std::domain_error(what), witness(std::move(w)) {}

Poset::Poset(std::vector<Mask> up) : up_(std::move(up)), down_(up_.size(), 0) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for_each_bit(up_[i], [&](int j) { down_[j] |= bit(i); });
  }
}

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> relations) {
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw IndexError("relation (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                       ") has a label outside [1, " + std::to_string(n) + "]");
    }
    up[a] |= bit(b);
  }
  close_transitively(up);
  for (int i = 0; i < n; ++i) {
    if ((up[i] >> i) & 1U) {
      throw CycleError("relations contain a cycle through element " + std::to_string(i + 1));
    }
  }
  return Poset(std::move(up));
}

Poset Poset::from_up_sets(std::vector<Mask> up) {
  const int n = static_cast<int>(up.size());
  check_size(n);
  for (int i = 0; i < n; ++i) {
    if ((up[i] & ~full_mask(n)) != 0) throw IndexError("up-set leaves the ground set");
    if ((up[i] >> i) & 1U) throw CycleError("relation is not irreflexive");
    Mask reach = 0;
    for_each_bit(up[i], [&](int j) { reach |= up[j]; });
    if ((reach & ~up[i]) != 0) throw std::invalid_argument("relation is not transitive");
  }
  return Poset(std::move(up));
}

Poset Poset::chain(int n) {
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[i] = full_mask(n) & ~full_mask(i + 1);
  return Poset(std::move(up));
}

Poset Poset::antichain(int n) {
  check_size(n);
  return Poset(std::vector<Mask>(static_cast<std::size_t>(n), 0));
}

Mask Poset::minimal_elements() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i) {
    if (down_[i] == 0) m |= bit(i);
  }
  return m;
}

Mask Poset::maximal_elements() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i) {
    if (up_[i] == 0) m |= bit(i);
  }
  return m;
}

int Poset::relation_count() const {
  int c = 0;
  for (Mask m : up_) c += popcount(m);
  return c;
}

Digraph Digraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_size(n);
  Digraph d(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw IndexError("edge label outside the vertex set");
    d.add_edge(a, b);
  }
  return d;
}

Digraph Digraph::of_poset(const Poset& p) {
  Digraph d(p.size());
  for (int i = 0; i < p.size(); ++i) d.out_[i] = p.up(i);
  return d;
}

void Digraph::add_edge(int from, int to) { out_[from] |= bit(to); }

Mask Digraph::in(int i) const {
  Mask m = 0;
  for (int j = 0; j < size(); ++j) {
    if (has_edge(j, i)) m |= bit(j);
  }
  return m;
}

int Digraph::edge_count() const {
  int c = 0;
  for (Mask m : out_) c += popcount(m);
  return c;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_size(n);
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw IndexError("edge label outside the vertex set");
    g.add_edge(a, b);
  }
  return g;
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("graphs have no loops");
  adj_[a] |= bit(b);
  adj_[b] |= bit(a);
}

int Graph::edge_count() const {
  int c = 0;
  for (Mask m : adj_) c += popcount(m);
  return c / 2;
}

bool Graph::is_clique(Mask vertices) const {
  bool ok = true;
  for_each_bit(vertices, [&](int v) {
    if ((vertices & ~bit(v) & ~adj_[v]) != 0) ok = false;
  });
  return ok;
}

Poset dual(const Poset& p) {
  std::vector<Mask> up(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) up[i] = p.down(i);
  return Poset::from_up_sets(std::move(up));
}

Poset restrict_standardize(const Poset& p, Mask subset) {
  subset &= p.ground();
  std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
  int k = 0;
  for_each_bit(subset, [&](int i) { index[i] = k++; });
  std::vector<Mask> up(static_cast<std::size_t>(k), 0);
  for_each_bit(subset, [&](int i) {
    for_each_bit(p.up(i) & subset, [&](int j) { up[index[i]] |= bit(index[j]); });
  });
  return Poset::from_up_sets(std::move(up));
}

Poset ordinal_sum(const Poset& lower, const Poset& upper) {
  const int a = lower.size();
  const int n = a + upper.size();
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n));
  const Mask above = full_mask(n) & ~full_mask(a);
  for (int i = 0; i < a; ++i) up[i] = lower.up(i) | above;
  for (int i = 0; i < upper.size(); ++i) up[a + i] = upper.up(i) << a;
  return Poset::from_up_sets(std::move(up));
}

Poset disjoint_union(const Poset& x, const Poset& y) {
  const int a = x.size();
  const int n = a + y.size();
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n));
  for (int i = 0; i < a; ++i) up[i] = x.up(i);
  for (int i = 0; i < y.size(); ++i) up[a + i] = y.up(i) << a;
  return Poset::from_up_sets(std::move(up));
}

Poset cartesian_product(const Poset& p, const Poset& q) {
  const int a = p.size();
  const int b = q.size();
  check_size(a * b);
  std::vector<Mask> up(static_cast<std::size_t>(a * b), 0);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      for (int k = 0; k < a; ++k) {
        for (int l = 0; l < b; ++l) {
          const bool le_first = i == k || p.less(i, k);
          const bool le_second = j == l || q.less(j, l);
          if (le_first && le_second && (i != k || j != l)) up[i * b + j] |= bit(k * b + l);
        }
      }
    }
  }
  return Poset::from_up_sets(std::move(up));
}

Poset relabel(const Poset& p, std::span<const int> perm) {
  std::vector<Mask> up(static_cast<std::size_t>(p.size()), 0);
  for (int i = 0; i < p.size(); ++i) {
    for_each_bit(p.up(i), [&](int j) { up[perm[i]] |= bit(perm[j]); });
  }
  return Poset::from_up_sets(std::move(up));
}

std::vector<Listing> linear_extensions(const Poset& p) {
  std::vector<Listing> out;
  Listing current;
  current.reserve(p.size());
  // Backtracking over currently minimal elements, smallest label first.
  auto rec = [&](auto&& self, Mask placed) -> void {
    if (placed == p.ground()) {
      out.push_back(current);
      return;
    }
    for (int x = 0; x < p.size(); ++x) {
      if ((placed >> x) & 1U) continue;
      if ((p.down(x) & ~placed) != 0) continue;
      current.push_back(x);
      self(self, placed | bit(x));
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t zeta(const Poset& p) {
  const int n = p.size();
  if (n == 0) return 1;
  // Count completions from each placed down-set.
  if (n <= 20) {
    std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (ways[s] == 0) continue;
      for_each_bit(full_mask(n) & ~s, [&](int x) {
        if ((p.down(x) & ~s) == 0) ways[s | bit(x)] = checked_add(ways[s | bit(x)], ways[s]);
      });
    }
    return ways[full_mask(n)];
  }
  std::unordered_map<Mask, std::uint64_t> memo;
  auto rec = [&](auto&& self, Mask placed) -> std::uint64_t {
    if (placed == p.ground()) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for_each_bit(p.ground() & ~placed, [&](int x) {
      if ((p.down(x) & ~placed) == 0) total = checked_add(total, self(self, placed | bit(x)));
    });
    memo.emplace(placed, total);
    return total;
  };
  return rec(rec, 0);
}

std::vector<std::uint64_t> zeta_of_all_subsets(const Poset& p) {
  const int n = p.size();
  if (n > 24) throw SizeError("zeta_of_all_subsets needs |P| <= 24");
  std::vector<std::uint64_t> z(std::size_t{1} << n, 0);
  z[0] = 1;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    // Remove an element that is maximal inside s.
    std::uint64_t total = 0;
    for_each_bit(s, [&](int x) {
      if ((p.up(x) & s) == 0) total = checked_add(total, z[s & ~bit(x)]);
    });
    z[s] = total;
  }
  return z;
}

bool is_linear_extension(const Poset& p, std::span<const int> listing) {
  const int n = p.size();
  if (static_cast<int>(listing.size()) != n) {
    throw LengthError("listing has length " + std::to_string(listing.size()) + ", poset has " +
                      std::to_string(n) + " elements");
  }
  Mask seen = 0;
  for (int x : listing) {
    if (x < 0 || x >= n || ((seen >> x) & 1U)) throw std::invalid_argument("listing is not a permutation");
    // Nothing placed earlier may be above x.
    if ((p.up(x) & seen) != 0) return false;
    seen |= bit(x);
  }
  return true;
}

Graph incomparability_graph(const Poset& p) {
  Graph g(p.size());
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (!p.comparable(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

// Enumerate chains of exactly `len` elements drawn from `allowed`, bottom-up.
template <class F>
bool for_each_chain(const Poset& p, Mask allowed, int len, std::vector<int>& chain, F&& f) {
  if (static_cast<int>(chain.size()) == len) return f(chain);
  Mask candidates = allowed;
  if (!chain.empty()) candidates &= p.up(chain.back());
  bool stop = false;
  for_each_bit(candidates, [&](int x) {
    if (stop) return;
    chain.push_back(x);
    stop = for_each_chain(p, allowed, len, chain, f);
    chain.pop_back();
  });
  return stop;
}

}  // namespace

std::optional<TwoChainWitness> find_two_chains(const Poset& p, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("chain lengths must be positive");
  std::optional<TwoChainWitness> found;
  std::vector<int> first;
  for_each_chain(p, p.ground(), a, first, [&](const std::vector<int>& c1) {
    Mask rest = p.ground();
    for (int x : c1) rest &= ~(bit(x) | p.up(x) | p.down(x));
    std::vector<int> second;
    return for_each_chain(p, rest, b, second, [&](const std::vector<int>& c2) {
      found = TwoChainWitness{c1, c2};
      return true;
    });
  });
  return found;
}

bool is_ab_free(const Poset& p, int a, int b) { return !find_two_chains(p, a, b).has_value(); }

std::vector<Mask> factor_blocks(const Poset& p) {
  const int n = p.size();
  std::vector<Mask> blocks;
  if (n == 0) return blocks;
  // A cut of size k must be {x : |down(x)| < k}, with everything in it below
  // everything outside it.
  std::vector<int> down_count(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) down_count[i] = popcount(p.down(i));
  Mask previous = 0;
  for (int k = 1; k <= n; ++k) {
    Mask cut = 0;
    for (int i = 0; i < n; ++i) {
      if (down_count[i] < k) cut |= bit(i);
    }
    if (popcount(cut) != k) continue;
    bool ok = true;
    for_each_bit(cut, [&](int i) {
      if ((p.up(i) | cut) != p.ground()) ok = false;
    });
    if (!ok) continue;
    blocks.push_back(cut & ~previous);
    previous = cut;
  }
  return blocks;
}

std::vector<Poset> irreducible_factorization(const Poset& p) {
  std::vector<Poset> factors;
  for (Mask block : factor_blocks(p)) factors.push_back(restrict_standardize(p, block));
  return factors;
}

bool is_irreducible(const Poset& p) { return factor_blocks(p).size() == 1; }

int longest_chain_size(const Poset& p) {
  const int n = p.size();
  std::vector<int> best(static_cast<std::size_t>(n), 0);
  int result = 0;
  // Process elements in an order compatible with the poset.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(p.down(a)) < popcount(p.down(b)); });
  for (int x : order) {
    int b = 1;
    for_each_bit(p.down(x), [&](int y) { b = std::max(b, best[y] + 1); });
    best[x] = b;
    result = std::max(result, b);
  }
  return result;
}

int largest_antichain_size(const Poset& p) {
  int best = 0;
  auto rec = [&](auto&& self, Mask candidates, int size) -> void {
    best = std::max(best, size);
    if (size + popcount(candidates) <= best) return;
    while (candidates != 0) {
      const int x = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, candidates & ~p.up(x) & ~p.down(x), size + 1);
    }
  };
  rec(rec, p.ground(), 0);
  return best;
}

Digraph transitive_closure(const Digraph& d) {
  std::vector<Mask> out(static_cast<std::size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) out[i] = d.out(i);
  close_transitively(out);
  Digraph c(d.size());
  for (int i = 0; i < d.size(); ++i) {
    for_each_bit(out[i], [&](int j) { c.add_edge(i, j); });
  }
  return c;
}

bool is_acyclic(const Digraph& d) {
  const Digraph c = transitive_closure(d);
  for (int i = 0; i < c.size(); ++i) {
    if (c.has_edge(i, i)) return false;
  }
  return true;
}

std::uint64_t zeta_digraph(const Digraph& d) {
  const int n = d.size();
  if (n > 20) throw SizeError("zeta_digraph needs at most 20 vertices");
  std::vector<Mask> preds(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) preds[i] = d.in(i);
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (ways[s] == 0) continue;
    for_each_bit(full_mask(n) & ~s, [&](int x) {
      // x may go next only if every in-neighbour is already placed; a loop
      // keeps x out forever.
      if ((preds[x] & ~s) == 0) ways[s | bit(x)] = checked_add(ways[s | bit(x)], ways[s]);
    });
  }
  return ways[full_mask(n)];
}

Poset poset_of_digraph(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < d.size(); ++i) {
    for_each_bit(d.out(i), [&](int j) { edges.emplace_back(i, j); });
  }
  return Poset::from_relations(d.size(), edges);
}

}  // namespace posetsym
