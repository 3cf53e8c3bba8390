#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "posetsym/comb.hpp"
#include "posetsym/error.hpp"

using namespace posetsym;

TEST_CASE("compositions and partitions in reverse-lexicographic order") {
  const auto c3 = compositions(3);
  REQUIRE(c3.size() == 4);
  CHECK(c3[0] == Composition{3});
  CHECK(c3[1] == Composition{2, 1});
  CHECK(c3[2] == Composition{1, 2});
  CHECK(c3[3] == Composition{1, 1, 1});
  const int partition_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    CHECK(compositions(n).size() == (n == 0 ? 1U : (1U << (n - 1))));
    const auto ps = partitions(n);
    CHECK(ps.size() == static_cast<std::size_t>(partition_counts[n]));
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
  }
  CHECK(partitions(4).front() == Partition{4});
  CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
}

TEST_CASE("invalid parts are rejected") {
  CHECK_THROWS(Composition{2, 0, 1});
  CHECK_THROWS(Partition{1, 2});
}

TEST_CASE("set and composition bijection") {
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& a : compositions(n)) {
      const IndexSet s = set_of(a);
      CHECK(s.n == n);
      CHECK(comp_of(s) == a);
      CHECK(comp_of_mask(n, s.members) == a);
      CHECK(s.size() == a.length() - 1);
      CHECK(opposite(opposite(a)) == a);
      CHECK(set_of(opposite(a)).members == opposite_mask(n, s.members));
    }
  }
  CHECK(set_of(Composition{1, 3}).elements() == std::vector<int>{1});
  CHECK(IndexSet::of(5, {1, 4}).members == 0b1001U);
}

TEST_CASE("refinement") {
  CHECK(refines(Composition{1, 1, 2}, Composition{2, 2}));
  CHECK_FALSE(refines(Composition{1, 2, 1}, Composition{2, 2}));
  CHECK(refines(Composition{1, 1, 1}, Composition{3}));
  CHECK_THROWS_AS(refines(Composition{1}, Composition{2}), WeightError);
}

TEST_CASE("set compositions are counted by the Fubini numbers") {
  const std::size_t fubini[] = {1, 1, 3, 13, 75, 541, 4683};
  for (int n = 0; n <= 6; ++n) {
    const auto all = set_compositions(full_mask(n));
    CHECK(all.size() == fubini[n]);
    std::set<std::vector<Mask>> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& blocks : all) {
      Mask seen = 0;
      for (Mask b : blocks) {
        CHECK((seen & b) == 0);
        seen |= b;
      }
      CHECK(seen == full_mask(n));
      CHECK(type_of(blocks).weight() == n);
    }
  }
}

TEST_CASE("sorting a composition") {
  CHECK(sort_to_partition(Composition{1, 3, 2}) == Partition{3, 2, 1});
  CHECK(reverse(Listing{0, 2, 1}) == Listing{1, 2, 0});
}
