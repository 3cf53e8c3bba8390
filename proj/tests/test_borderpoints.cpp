#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "posetsym/borderpoints.hpp"
#include "posetsym/canonical.hpp"
#include "posetsym/error.hpp"
#include "posetsym/harness.hpp"
#include "posetsym/linfun.hpp"

using namespace posetsym;

namespace {

Plucking counterexample_family() {
  const std::vector<std::uint32_t> gens{fx::set1({1, 2}), fx::set1({1, 3}), fx::set1({2, 4})};
  return Plucking::generated_by(5, gens);
}

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Plucking random_plucking(gen::Rng& rng, int n) {
  std::vector<std::uint32_t> gens;
  const int k = rng.between(1, 3);
  for (int i = 0; i < k; ++i) gens.push_back(static_cast<std::uint32_t>(rng.next()) & full_index_mask(n));
  return Plucking::generated_by(n, gens);
}

}  // namespace

TEST_CASE("plucking validation") {
  const std::vector<std::uint32_t> none;
  CHECK_THROWS_AS(Plucking::from_members(3, none), EmptyError);
  const std::vector<std::uint32_t> not_up{fx::set1({1})};
  CHECK_THROWS(Plucking::from_members(3, not_up));
  const std::vector<std::uint32_t> outside{fx::set1({3})};
  CHECK_THROWS_AS(Plucking::from_members(3, outside), IndexError);
  CHECK_THROWS_AS(Plucking::power_set(kMaxPluckingAmbient + 1), SizeError);
  const Plucking a = counterexample_family();
  CHECK(a.size() == 8);
  CHECK(Plucking::from_members(5, a.members()) == a);
}

TEST_CASE("the complete plucking with vanishing chi") {
  const Plucking a = counterexample_family();
  CHECK(sorted(minimal_sets(a)) == sorted({fx::set1({1, 2}), fx::set1({1, 3}), fx::set1({2, 4})}));
  CHECK(is_complete(a));
  CHECK(chi(a) == 0);
  CHECK_FALSE(vanishing_check(a, a.full_set()));
  const Mountain m = mountain_from_plucking(a);
  CHECK(m.f_vector() == std::vector<std::int64_t>{1, 4, 3});
  CHECK(chi_mountain(m) == 0);
  CHECK_FALSE(realizability_necessary(a));
  CHECK_THROWS_AS(chi_at(a, fx::set1({1})), NotMember);
  CHECK_THROWS_AS(vanishing_check(a, 0), NotMember);
}

TEST_CASE("power sets and single-member pluckings") {
  for (int n = 1; n <= 8; ++n) {
    const Plucking a = Plucking::power_set(n);
    CHECK(minimal_sets(a) == std::vector<std::uint32_t>{0});
    CHECK(is_complete(a) == (n == 1));
    CHECK(chi_at(a, 0) == 1);
    for (std::uint32_t s = 1; s <= full_index_mask(n); ++s) {
      CHECK(chi_at(a, s) == 0);
      CHECK(vanishing_check(a, s));
    }
    const std::vector<std::uint32_t> top{full_index_mask(n)};
    const Plucking b = Plucking::from_members(n, top);
    CHECK(chi(b) == 1);
    CHECK(mountain_from_plucking(b).f_vector() == std::vector<std::int64_t>{1});
    CHECK(realizability_necessary(b));
  }
  const Mountain cube = mountain_from_plucking(Plucking::power_set(3));
  CHECK(cube.f_vector() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(chi_mountain(cube) == 0);
  const std::vector<std::uint32_t> one{fx::set1({1})};
  const Plucking g = Plucking::generated_by(3, one);
  CHECK(minimal_sets(g) == one);
  CHECK_FALSE(is_complete(g));
}

TEST_CASE("border sets of named listings") {
  const Plucking e = comp_of_listing(fx::ex1(), fx::listing1({1, 4, 2, 3}));
  CHECK(sorted(minimal_sets(e)) == sorted({fx::set1({2}), fx::set1({3})}));
  const Plucking t = comp_of_listing(fx::two_chains(), fx::listing1({4, 3, 2, 1}));
  CHECK(sorted(minimal_sets(t)) == sorted({fx::set1({2}), fx::set1({1, 3})}));
  CHECK(comp_of_listing(fx::ex1(), fx::listing1({1, 3, 4, 2})) == Plucking::power_set(4));
  CHECK_THROWS_AS(comp_of_listing(fx::ex1(), fx::listing1({1, 2})), LengthError);
}

TEST_CASE("border sets against brute force") {
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets(n, false)) {
      const auto m = oracle::matrix_of(p);
      for (const auto& w : oracle::permutations(n)) {
        const Plucking a = comp_of_listing(p, w);
        const auto expect = oracle::border_sets(m, w);
        CHECK(a.size() == expect.size());
        for (const auto& cuts : expect) {
          std::uint32_t mask = 0;
          for (int c : cuts) mask |= 1U << (c - 1);
          CHECK(a.contains(mask));
        }
        CHECK(realizability_necessary(a));
        const auto all = chi_all(a);
        for (std::uint32_t s : a.members()) {
          CHECK(all[s] == chi_at(a, s));
          CHECK(all[s] == chi_at_by_depth(a, s));
          CHECK(all[s] == oracle::signed_sum(expect, IndexSet{n, s}.elements()));
          if (vanishing_check(a, s)) CHECK(all[s] == 0);
        }
      }
    }
  }
}

TEST_CASE("chi vanishes off the union of minimal sets") {
  gen::Rng rng(606);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.between(1, 7);
    const Plucking a = random_plucking(rng, n);
    for (std::uint32_t s : a.members()) {
      if (vanishing_check(a, s)) CHECK(chi_at(a, s) == 0);
      CHECK(chi_at(a, s) == chi_at_by_depth(a, s));
    }
    const Mountain m = mountain_from_plucking(a);
    CHECK(chi_mountain(m) == chi_from_fvector(m.f_vector()));
    CHECK(chi_mountain(m) == chi(a));
  }
}

TEST_CASE("reversing listings of named posets") {
  for (int n = 1; n <= 6; ++n) {
    Listing down(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i)] = n - 1 - i;
    CHECK(reversing_listings(Poset::chain(n)) == std::vector<Listing>{down});
    CHECK(zeta1(Poset::chain(n)) == 1);
    const MountainSum ph = phi(Poset::chain(n));
    REQUIRE(ph.terms().size() == 1);
    CHECK(ph.terms().begin()->second.multiplicity == 1);
    CHECK(ph.terms().begin()->second.representative.poset().size() == 1);
    if (n >= 2) {
      CHECK(reversing_listings(Poset::antichain(n)).empty());
      CHECK(zeta1(Poset::antichain(n)) == 0);
      CHECK(phi(Poset::antichain(n)).is_zero());
    }
  }
  CHECK(reversing_listings(fx::kite()).empty());
}

TEST_CASE("pruned reversing listings equal the full scan") {
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      std::vector<Listing> brute;
      for (const auto& w : oracle::permutations(n)) {
        if (is_complete(comp_of_listing(p, w))) brute.push_back(w);
      }
      const auto rev = reversing_listings(p);
      CHECK(rev == brute);
      for (const Listing& w : rev) {
        if (n > 1) {
          CHECK_FALSE(((p.minimal_elements() >> w.front()) & 1U));
          CHECK_FALSE(((p.maximal_elements() >> w.back()) & 1U));
        }
      }
    }
  }
}

TEST_CASE("zeta1 through the antipode and phi") {
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      const std::int64_t z1 = zeta1(p);
      const QsymElement s = qsym_antipode(linear_function(dual(p)));
      const Rational sign = n % 2 == 0 ? 1 : -1;
      CHECK(sign * s.coefficient_of_set(0) == Rational(z1));
      CHECK(linear_polynomial(dual(p))(-1) == sign * Rational(z1));
      const MountainSum ph = phi(p);
      CHECK(ph.chi() == Integer(z1));
      CHECK(ph.total_multiplicity() == Integer(reversing_listings(p).size()));
    }
  }
}

TEST_CASE("zeta1 and phi are multiplicative") {
  std::vector<Poset> small;
  for (int n = 1; n <= 3; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) small.push_back(p);
  }
  for (const Poset& p : small) {
    for (const Poset& q : small) {
      const Poset pq = ordinal_sum(p, q);
      CHECK(zeta1(pq) == zeta1(p) * zeta1(q));
      CHECK(phi(pq) == phi(p) * phi(q));
    }
  }
}

TEST_CASE("discrete factors force an empty reversing set") {
  for (int n = 2; n <= 6; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      bool discrete = false;
      for (const Poset& f : irreducible_factorization(p)) discrete = discrete || (f.size() >= 2 && f.relation_count() == 0);
      if (discrete) CHECK(reversing_listings(p).empty());
    }
  }
}

TEST_CASE("comp duality on every poset with three points") {
  for (const Poset& p : enumerate_posets(3, false)) {
    for (std::uint32_t s = 0; s <= full_index_mask(3); ++s) CHECK(comp_duality_check(p, s));
  }
  CHECK(comp_duality_check(Poset::chain(2), fx::set1({1})));
}

TEST_CASE("mountains") {
  CHECK_THROWS_AS(Mountain(Poset::antichain(2)), std::invalid_argument);
  CHECK_THROWS_AS(Mountain{Poset{}}, std::invalid_argument);
  const Mountain v(fx::poset1(3, {{1, 3}, {2, 3}}));
  CHECK(v.top() == 2);
  CHECK(v.depth(0) == 1);
  CHECK(v.f_vector() == std::vector<std::int64_t>{1, 2});
  CHECK(chi_from_fvector(v.f_vector()) == -1);

  MountainSum a;
  a.add(v, 2);
  a.add(Mountain(fx::poset1(3, {{2, 3}, {1, 3}})), 1);
  CHECK(a.terms().size() == 1);
  CHECK(a.total_multiplicity() == 3);
  CHECK(a.chi() == -3);
  const auto j = to_json(a);
  CHECK(j[0]["multiplicity"] == 3);
  CHECK(j[0]["fvector"] == nlohmann::json::array({1, 2}));
}
