#include <doctest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "posetsym/canonical.hpp"
#include "posetsym/error.hpp"
#include "posetsym/poset.hpp"

using namespace posetsym;

TEST_CASE("construction closes relations and rejects cycles") {
  const Poset p = Poset::from_relations(3, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(p.relation_count() == 3);
  CHECK(fx::two_chains().relation_count() == 2);
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 0}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 2}}), IndexError);
}

TEST_CASE("from_up_sets validates the order axioms") {
  CHECK_NOTHROW(Poset::from_up_sets({bit(1) | bit(2), bit(2), 0}));
  CHECK_THROWS(Poset::from_up_sets({bit(1), bit(2), 0}));
  CHECK_THROWS(Poset::from_up_sets({bit(0)}));
}

TEST_CASE("dual, restriction and sums") {
  const Poset e = fx::ex1();
  CHECK(dual(dual(e)) == e);
  const Poset r = restrict_standardize(e, bit(0) | bit(1) | bit(3));
  CHECK(r == fx::poset1(3, {{1, 2}, {1, 3}}));
  const Poset s = ordinal_sum(Poset::chain(2), Poset::antichain(2));
  CHECK(s.size() == 4);
  CHECK(s.less(0, 3));
  CHECK(disjoint_union(Poset::chain(2), Poset::chain(2)).relation_count() == 2);
  CHECK(disjoint_union(Poset::chain(2), Poset::chain(1)).relation_count() == 1);
}

TEST_CASE("cartesian product of mountains is a mountain") {
  const Poset v = fx::poset1(3, {{1, 3}, {2, 3}});
  const Poset c = Poset::chain(2);
  const Poset prod = cartesian_product(v, c);
  CHECK(prod.size() == 6);
  CHECK(popcount(prod.maximal_elements()) == 1);
}

TEST_CASE("zeta against brute force and its multiplicativity") {
  CHECK(zeta(fx::two_plus_one()) == 3);
  CHECK(zeta(fx::two_chains()) == 6);
  CHECK(zeta(Poset()) == 1);
  gen::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const Poset p = gen::poset(rng, rng.between(0, 7));
    CHECK(zeta(p) == oracle::linear_extensions(oracle::matrix_of(p)));
    CHECK(zeta(p) == zeta(dual(p)));
    CHECK(zeta(p) == linear_extensions(p).size());
    const Poset q = gen::poset(rng, rng.between(0, 4));
    CHECK(zeta(ordinal_sum(p, q)) == zeta(p) * zeta(q));
  }
  // Memoized path beyond the array DP.
  CHECK(zeta(Poset::antichain(12)) == 479001600ULL);
  CHECK(zeta(disjoint_union(Poset::chain(11), Poset::chain(11))) == 705432ULL);
}

TEST_CASE("zeta of all subsets agrees with restriction") {
  gen::Rng rng(5);
  const Poset p = gen::poset(rng, 7);
  const auto all = zeta_of_all_subsets(p);
  for (Mask s = 0; s < all.size(); s += 7) CHECK(all[s] == zeta(restrict_standardize(p, s)));
}

TEST_CASE("linear extension check") {
  CHECK_FALSE(is_linear_extension(fx::ex1(), fx::listing1({1, 4, 2, 3})));
  CHECK(is_linear_extension(fx::ex1(), fx::listing1({1, 2, 3, 4})));
  CHECK_THROWS_AS(is_linear_extension(fx::ex1(), fx::listing1({1, 2})), LengthError);
  CHECK_THROWS_AS(is_linear_extension(fx::ex1(), fx::listing1({1, 1, 2, 3})), std::invalid_argument);
}

TEST_CASE("incomparability graph and induced chains") {
  const Graph g = incomparability_graph(fx::two_chains());
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(is_ab_free(fx::two_chains(), 2, 2));
  CHECK_FALSE(is_ab_free(fx::two_plus_one(), 2, 1));
  CHECK(is_ab_free(fx::two_plus_one(), 2, 2));
  const auto w = find_two_chains(fx::two_chains(), 2, 2);
  REQUIRE(w.has_value());
  CHECK(w->first.size() == 2);
  CHECK(w->second.size() == 2);
  CHECK(is_ab_free(Poset::chain(5), 1, 1));
}

TEST_CASE("ordinal-sum factorization") {
  const auto f = irreducible_factorization(fx::kite());
  REQUIRE(f.size() == 1);
  CHECK(is_irreducible(fx::kite()));
  CHECK(irreducible_factorization(Poset::chain(4)).size() == 4);
  gen::Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const Poset p = ordinal_sum(gen::poset(rng, rng.between(1, 3)), gen::poset(rng, rng.between(1, 3)));
    const auto factors = irreducible_factorization(p);
    Poset back;
    for (const Poset& x : factors) {
      CHECK(is_irreducible(x));
      back = ordinal_sum(back, x);
    }
    CHECK(is_isomorphic(back, p));
    CHECK(factors.size() >= 2);
  }
}

TEST_CASE("chains and antichains") {
  CHECK(longest_chain_size(Poset::chain(5)) == 5);
  CHECK(longest_chain_size(Poset()) == 0);
  CHECK(largest_antichain_size(Poset::antichain(4)) == 4);
  CHECK(largest_antichain_size(fx::two_chains()) == 2);
}

TEST_CASE("digraph zeta") {
  Digraph d(3);
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  CHECK(transitive_closure(d).has_edge(0, 2));
  CHECK(zeta_digraph(d) == 1);
  Digraph cyc(3);
  cyc.add_edge(0, 1);
  cyc.add_edge(1, 2);
  cyc.add_edge(2, 0);
  CHECK_FALSE(is_acyclic(cyc));
  CHECK(zeta_digraph(cyc) == 0);
  CHECK_THROWS_AS(poset_of_digraph(cyc), CycleError);
  Digraph loop(2);
  loop.add_edge(1, 1);
  CHECK(zeta_digraph(loop) == 0);

  gen::Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.between(1, 6);
    const auto order = rng.permutation(n);
    Digraph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng.chance(2, 5)) g.add_edge(order[a], order[b]);
      }
    }
    CHECK(zeta_digraph(g) == zeta_digraph(transitive_closure(g)));
    CHECK(zeta_digraph(g) == zeta(poset_of_digraph(g)));
  }
}
