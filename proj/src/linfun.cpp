#include "posetsym/linfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "posetsym/borderpoints.hpp"
#include "posetsym/config.hpp"
#include "posetsym/error.hpp"

namespace posetsym {

namespace {

std::vector<int> witness_elements(const TwoChainWitness& w) {
  std::vector<int> out = w.first;
  out.insert(out.end(), w.second.begin(), w.second.end());
  return out;
}

void require_free(const Poset& p, int a, int b, const char* what) {
  if (auto w = find_two_chains(p, a, b)) {
    throw NotApplicable(std::string(what) + " requires a (" + std::to_string(a) + "+" + std::to_string(b) +
                            ")-free poset",
                        witness_elements(*w));
  }
}

// Set partitions of `ground` into blocks on which `ok(block, v)` accepts each
// newly added vertex v. Blocks are listed by increasing least element.
void partitions_into(Mask ground, const std::function<bool(Mask, int)>& ok,
                     const std::function<void(const std::vector<Mask>&)>& emit) {
  std::vector<Mask> blocks;
  std::function<void(Mask)> next_block;
  std::function<void(Mask, Mask, Mask)> grow = [&](Mask rest, Mask block, Mask candidates) {
    if (candidates == 0) {
      blocks.push_back(block);
      next_block(rest);
      blocks.pop_back();
      return;
    }
    const int v = std::countr_zero(candidates);
    const Mask later = candidates & ~bit(v);
    grow(rest, block, later);
    if (ok(block, v)) grow(rest & ~bit(v), block | bit(v), later);
  };
  next_block = [&](Mask rest) {
    if (rest == 0) {
      emit(blocks);
      return;
    }
    const int x = std::countr_zero(rest);
    grow(rest & ~bit(x), bit(x), rest & ~bit(x));
  };
  next_block(ground);
}

// Calls `emit` with every permutation of the vertex set whose cycles are
// cliques of g.
void for_each_clique_cycle_permutation(const Graph& g, const std::function<void(const std::vector<int>&)>& emit) {
  const int n = g.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> blocks;

  std::function<void(std::size_t)> cycles = [&](std::size_t b) {
    if (b == blocks.size()) {
      emit(perm);
      return;
    }
    std::vector<int> order = blocks[b];
    // The least vertex stays first; every arrangement of the rest is one
    // cyclic order.
    do {
      for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = order[(i + 1) % order.size()];
      cycles(b + 1);
    } while (std::next_permutation(order.begin() + 1, order.end()));
  };

  partitions_into(
      full_mask(n), [&](Mask block, int v) { return (g.neighbours(v) & block) == block; },
      [&](const std::vector<Mask>& parts) {
        blocks.clear();
        for (Mask m : parts) {
          std::vector<int> elems;
          for_each_bit(m, [&](int v) { elems.push_back(v); });
          blocks.push_back(std::move(elems));
        }
        cycles(0);
      });
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(perm[v])) {
      seen[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

bool block_is_extension(const Poset& p, std::span<const int> block) {
  for (std::size_t j = 1; j < block.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p.less(block[j], block[i])) return false;
    }
  }
  return true;
}

// Row-by-row fillings of `shape`; columns must increase strictly when
// `tableau` is set.
void fill(const Poset& p, const std::vector<int>& shape, bool tableau,
          const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::vector<int>> rows(shape.size());
  std::function<void(std::size_t, Mask)> place = [&](std::size_t r, Mask used) {
    if (r == shape.size()) {
      emit(rows);
      return;
    }
    auto& row = rows[r];
    if (row.size() == static_cast<std::size_t>(shape[r])) {
      place(r + 1, used);
      return;
    }
    const std::size_t col = row.size();
    Mask candidates = p.ground() & ~used;
    for (int e : row) candidates &= ~p.down(e);  // nothing below an earlier entry
    if (tableau && r > 0) candidates &= p.up(rows[r - 1][col]);
    for_each_bit(candidates, [&](int v) {
      row.push_back(v);
      place(r, used | bit(v));
      row.pop_back();
    });
  };
  place(0, 0);
}

}  // namespace

QsymElement linear_function(const Poset& p) {
  const int n = p.size();
  check_degree(n, "linear_function");
  const std::vector<std::uint64_t> z = zeta_of_all_subsets(p);
  const std::size_t subsets = std::size_t{1} << n;

  // f[S][mask] = coefficient of M_comp(mask) in L of the subposet on S.
  std::vector<std::vector<std::uint64_t>> f(subsets);
  f[0] = {1};
  for (std::size_t s = 1; s < subsets; ++s) {
    const int k = std::popcount(s);
    auto& out = f[s];
    out.assign(std::size_t{1} << (k - 1), 0);
    for (std::size_t b = s; b != 0; b = (b - 1) & s) {
      if (z[b] == 0) continue;
      const int a = std::popcount(b);
      const auto& rest = f[s & ~b];
      if (a == k) {
        out[0] += z[b] * rest[0];
        continue;
      }
      const std::uint32_t head = std::uint32_t{1} << (a - 1);
      for (std::size_t r = 0; r < rest.size(); ++r) {
        if (rest[r] != 0) out[head | (static_cast<std::uint32_t>(r) << a)] += z[b] * rest[r];
      }
    }
  }

  QsymElement out(n, QBasis::M);
  const auto& top = f[subsets - 1];
  for (std::size_t mask = 0; mask < top.size(); ++mask) {
    if (top[mask] != 0) out.add_set(static_cast<std::uint32_t>(mask), Rational(Integer(top[mask])));
  }
  return out;
}

std::uint64_t sigma_count(const Poset& p, const Composition& alpha) {
  const int n = p.size();
  if (alpha.weight() != n) throw WeightError("composition weight differs from |P|");
  Listing w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    std::size_t start = 0;
    for (int part : alpha.parts()) {
      if (!block_is_extension(p, std::span<const int>(w).subspan(start, static_cast<std::size_t>(part)))) {
        ok = false;
        break;
      }
      start += static_cast<std::size_t>(part);
    }
    if (ok) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

QsymElement f_coefficients_direct(const Poset& p) {
  const int n = p.size();
  check_degree(n, "f_coefficients_direct");
  QsymElement out(n, QBasis::F);
  if (n == 0) {
    out.add_set(0, 1);
    return out;
  }
  std::vector<std::int64_t> total(std::size_t{1} << (n - 1), 0);
  Listing w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  do {
    const Plucking a = comp_of_listing(p, w);
    const std::vector<std::int64_t> c = chi_all(a);
    const auto& member = a.indicator();
    for (std::size_t s = 0; s < c.size(); ++s) {
      if (member[s]) total[s] += c[s];
    }
  } while (std::next_permutation(w.begin(), w.end()));
  for (std::size_t s = 0; s < total.size(); ++s) {
    if (total[s] != 0) out.add_set(static_cast<std::uint32_t>(s), Rational(total[s]));
  }
  return out;
}

std::pair<Rational, Rational> p_coeff_special(const Poset& p) {
  const int n = p.size();
  if (n == 0) throw EmptyError("p_coeff_special needs a nonempty poset");
  const int pairs = n * (n - 1) / 2 - p.relation_count();
  return {Rational(1), Rational(pairs)};
}

std::vector<StablePartition> stable_partitions(const Poset& p) {
  std::vector<StablePartition> out;
  partitions_into(
      p.ground(), [&](Mask block, int v) { return ((p.up(v) | p.down(v)) & block) == 0; },
      [&](const std::vector<Mask>& blocks) { out.push_back(blocks); });
  return out;
}

Integer zeta_22free(const Poset& p) {
  require_free(p, 2, 2, "zeta_22free");
  Integer total = 0;
  for (const auto& blocks : stable_partitions(p)) {
    Integer term = 1;
    for (Mask b : blocks) term *= factorial(popcount(b) - 1);
    total += term;
  }
  return total;
}

std::vector<CycleTypedPermutation> clique_cycle_permutations(const Graph& g) {
  std::vector<CycleTypedPermutation> out;
  for_each_clique_cycle_permutation(g, [&](const std::vector<int>& perm) {
    out.push_back({perm, cycle_type(perm)});
  });
  return out;
}

SymElement p_expansion_22free(const Poset& p) {
  require_free(p, 2, 2, "p_expansion_22free");
  const int n = p.size();
  check_degree(n, "p_expansion_22free");
  std::map<Partition, std::uint64_t> counts;
  for_each_clique_cycle_permutation(incomparability_graph(p),
                                    [&](const std::vector<int>& perm) { ++counts[cycle_type(perm)]; });
  SymElement out(n, SymBasis::p);
  for (const auto& [type, c] : counts) out.add(type, Rational(Integer(c)));
  return out;
}

std::vector<PFilling> p_tableaux(const Poset& p, const Partition& lambda) {
  if (lambda.weight() != p.size()) throw WeightError("partition weight differs from |P|");
  std::vector<PFilling> out;
  fill(p, lambda.parts(), true, [&](const std::vector<std::vector<int>>& rows) {
    out.push_back({lambda.as_composition(), rows});
  });
  return out;
}

std::uint64_t count_p_tableaux(const Poset& p, const Partition& lambda) {
  if (lambda.weight() != p.size()) throw WeightError("partition weight differs from |P|");
  std::uint64_t count = 0;
  fill(p, lambda.parts(), true, [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

SymElement s_expansion_21free(const Poset& p) {
  require_free(p, 2, 1, "s_expansion_21free");
  const int n = p.size();
  check_degree(n, "s_expansion_21free");
  SymElement out(n, SymBasis::s);
  for (const Partition& lambda : partitions(n)) {
    const std::uint64_t c = count_p_tableaux(p, lambda);
    if (c != 0) out.add(lambda, Rational(Integer(c)));
  }
  return out;
}

SymElement s_coefficients_generic(const Poset& p) {
  const int n = p.size();
  const QsymElement l = linear_function(p);
  SymElement out(n, SymBasis::s);
  for (const Partition& lambda : partitions(n)) {
    const int k = lambda.length();
    std::vector<int> pi(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    std::vector<int> shape;
    Rational c = 0;
    // Position j takes lambda_{pi(j)} - pi(j) + j (1-based); zero entries
    // are dropped (h_0 = 1) and a negative entry kills the term.
    std::function<void(int, int)> choose = [&](int j, int inversions) {
      if (j == k) {
        const Rational term = l.coefficient(Composition(shape));
        c += (inversions % 2 == 0) ? term : -term;
        return;
      }
      for (int t = 0; t < k; ++t) {
        if (used[t]) continue;
        const int entry = lambda[t] - t + j;
        if (entry < 0) continue;
        int later_smaller = 0;
        for (int u = 0; u < t; ++u) later_smaller += used[u] ? 0 : 1;
        used[t] = true;
        if (entry > 0) shape.push_back(entry);
        choose(j + 1, inversions + later_smaller);
        if (entry > 0) shape.pop_back();
        used[t] = false;
      }
    };
    choose(0, 0);
    if (c != 0) out.add(lambda, c);
  }
  return out;
}

SymElement e_expansion(const Poset& p) { return change_basis(detect_symmetric(linear_function(p)), SymBasis::e); }

std::pair<Rational, Rational> e_levelsum_check(const Poset& p, int k) {
  const int n = p.size();
  const SymElement e = e_expansion(p);
  Rational lhs = 0;
  for (const auto& [lambda, c] : e.terms()) {
    if (lambda.length() == k) lhs += c;
  }
  if (n == 0) return {lhs, Rational(k == 0 ? 1 : 0)};
  const QsymElement f = f_coefficients_direct(p);
  Rational rhs = 0;
  for (int i = std::max(k - 1, 0); i <= n - 1; ++i) {
    const std::uint32_t mask = full_index_mask(n) & ~full_index_mask(i + 1);
    const Rational c = f.coefficient_of_set(mask);
    if (c == 0) continue;
    const Rational term = c * Rational(binomial(i, k - 1));
    rhs += ((i - k + 1) % 2 == 0) ? term : -term;
  }
  return {lhs, rhs};
}

Polynomial linear_polynomial(const Poset& p) { return principal_specialization(linear_function(p)); }

}  // namespace posetsym
