#include <doctest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "posetsym/error.hpp"
#include "posetsym/harness.hpp"
#include "posetsym/linfun.hpp"
#include "posetsym/sym.hpp"

using namespace posetsym;

namespace {

void check_against_listings(const Poset& p) {
  const auto m = oracle::matrix_of(p);
  const QsymElement l = linear_function(p);
  for (const Composition& alpha : compositions(p.size())) {
    const std::uint64_t c = oracle::compatible(m, alpha.parts());
    CHECK(l.coefficient(alpha) == Rational(c));
    CHECK(sigma_count(p, alpha) == c);
  }
}

void check_f_direct(const Poset& p) {
  const int n = p.size();
  const auto m = oracle::matrix_of(p);
  const QsymElement f = f_coefficients_direct(p);
  CHECK(f == m_to_f(linear_function(p)));
  // [F_S] from the brute-force border sets
  for (std::uint32_t s = 0; s <= full_index_mask(n); ++s) {
    std::vector<int> cuts = IndexSet{n, s}.elements();
    std::int64_t total = 0;
    for (const auto& w : oracle::permutations(n)) total += oracle::signed_sum(oracle::border_sets(m, w), cuts);
    CHECK(f.coefficient_of_set(s) == Rational(total));
  }
}

}  // namespace

TEST_CASE("L_P against listing counts") {
  for (int n = 0; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets(n, false)) check_against_listings(p);
  }
  gen::Rng rng(101);
  for (int t = 0; t < 12; ++t) check_against_listings(gen::poset(rng, rng.between(5, 6)));
  CHECK_THROWS_AS(sigma_count(Poset::chain(3), Composition{1, 1}), WeightError);
}

TEST_CASE("F-expansion computed from pluckings") {
  for (int n = 0; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) check_f_direct(p);
  }
  check_f_direct(fx::ex1());
  gen::Rng rng(5);
  for (int t = 0; t < 4; ++t) check_f_direct(gen::poset(rng, 5));
}

TEST_CASE("named linear polynomials") {
  const Polynomial m = Polynomial::monomial(1);
  CHECK(linear_polynomial(Poset::antichain(2)) == m * m + m);
  CHECK(linear_polynomial(Poset::chain(2)) == m * m);
  CHECK(linear_polynomial(Poset()) == Polynomial::constant(1));
  gen::Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Poset p = gen::poset(rng, rng.between(1, 6));
    const Polynomial lp = linear_polynomial(p);
    CHECK(lp.degree() == p.size());
    CHECK(lp.coefficient(p.size()) == 1);
    CHECK(lp(1) == Rational(zeta(p)));
  }
}

TEST_CASE("special p-coefficients") {
  CHECK_THROWS_AS(p_coeff_special(Poset()), EmptyError);
  gen::Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const Poset p = gen::poset(rng, rng.between(2, 6));
    const int n = p.size();
    const auto [a, b] = p_coeff_special(p);
    const SymElement ps = change_basis(detect_symmetric(linear_function(p)), SymBasis::p);
    CHECK(a == 1);
    CHECK(ps.coefficient(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == a);
    std::vector<int> hook(static_cast<std::size_t>(n - 1), 1);
    hook[0] = 2;
    CHECK(ps.coefficient(Partition(hook)) == b);
    CHECK(b == Rational(n * (n - 1) / 2 - static_cast<int>(p.relation_count())));
  }
}

TEST_CASE("clique-cycle permutations") {
  Graph square(4);
  square.add_edge(0, 1);
  square.add_edge(1, 2);
  square.add_edge(2, 3);
  square.add_edge(3, 0);
  CHECK(clique_cycle_permutations(square).size() == 7);
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  CHECK(clique_cycle_permutations(k3).size() == 6);
  CHECK(clique_cycle_permutations(Graph(3)).size() == 1);

  SymElement expect(3, SymBasis::p);
  expect.add(Partition{1, 1, 1}, 1);
  expect.add(Partition{2, 1}, 2);
  CHECK(p_expansion_22free(fx::two_plus_one()) == expect);
}

TEST_CASE("(2+2)-free formulas") {
  for (int n = 0; n <= 6; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      if (!is_ab_free(p, 2, 2)) {
        CHECK_THROWS_AS(zeta_22free(p), NotApplicable);
        continue;
      }
      CHECK(zeta_22free(p) == Integer(zeta(p)));
      for (const StablePartition& blocks : stable_partitions(p)) {
        for (Mask b : blocks) CHECK(largest_antichain_size(restrict_standardize(p, b)) == popcount(b));
      }
      if (n <= 5) CHECK(p_expansion_22free(p) == change_basis(detect_symmetric(linear_function(p)), SymBasis::p));
    }
  }
  try {
    zeta_22free(fx::two_chains());
    FAIL("expected NotApplicable");
  } catch (const NotApplicable& e) {
    CHECK(e.witness.size() == 4);
  }
}

TEST_CASE("(2+1)-free Schur expansion and P-tableaux") {
  for (int n = 0; n <= 6; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      const SymElement s = change_basis(detect_symmetric(linear_function(p)), SymBasis::s);
      if (n <= 5) CHECK(s_coefficients_generic(p) == s);
      if (!is_ab_free(p, 2, 1)) {
        CHECK_THROWS_AS(s_expansion_21free(p), NotApplicable);
        continue;
      }
      CHECK(s_expansion_21free(p) == s);
      for (const Partition& lambda : partitions(n)) {
        CHECK(count_p_tableaux(p, lambda) == p_tableaux(p, lambda).size());
      }
    }
  }
  CHECK_THROWS_AS(count_p_tableaux(Poset::chain(2), Partition{3}), WeightError);
}

TEST_CASE("e-expansion and level sums") {
  gen::Rng rng(2);
  for (int t = 0; t < 25; ++t) {
    const Poset p = gen::poset(rng, rng.between(0, 6));
    const SymElement e = e_expansion(p);
    CHECK(e == change_basis(detect_symmetric(linear_function(p)), SymBasis::e));
    for (int k = 0; k <= p.size() + 1; ++k) {
      const auto [lhs, rhs] = e_levelsum_check(p, k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("chain-length convention read off the Schur support") {
  // Longest chains counted by elements match the longest Schur row count;
  // counting edges is off by one on every nonempty poset.
  int element_hits = 0;
  int edge_hits = 0;
  int seen = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      if (!is_ab_free(p, 2, 1)) continue;
      int longest = 0;
      const SymElement s = s_expansion_21free(p);
      for (const auto& [lambda, c] : s.terms()) longest = std::max(longest, lambda.length());
      element_hits += longest == longest_chain_size(p);
      edge_hits += longest == longest_chain_size(p) - 1;
      ++seen;
    }
  }
  CHECK(element_hits == seen);
  CHECK(edge_hits == 0);
}

TEST_CASE("widest p-hook is the width for (2+2)-free posets") {
  for (int n = 1; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      if (!is_ab_free(p, 2, 2)) continue;
      int widest = 0;
      const SymElement ps = p_expansion_22free(p);
      for (const auto& [lambda, c] : ps.terms()) {
        if (lambda.length() - 1 + lambda[0] == n && c != 0) widest = std::max(widest, lambda[0]);
      }
      CHECK(widest == largest_antichain_size(p));
    }
  }
}
