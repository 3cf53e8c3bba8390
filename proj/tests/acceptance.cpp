// Acceptance checks: one PASS/FAIL line per criterion; nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gen.hpp"
#include "oracles.hpp"
#include "posetsym/borderpoints.hpp"
#include "posetsym/harness.hpp"
#include "posetsym/linfun.hpp"
#include "posetsym/sym.hpp"

using namespace posetsym;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Poset poset1(int n, std::initializer_list<std::pair<int, int>> rel) {
  std::vector<std::pair<int, int>> zero;
  for (auto [a, b] : rel) zero.emplace_back(a - 1, b - 1);
  return Poset::from_relations(n, zero);
}

std::vector<int> listing1(std::initializer_list<int> w) {
  std::vector<int> out;
  for (int v : w) out.push_back(v - 1);
  return out;
}

std::uint32_t set1(std::initializer_list<int> members) {
  std::uint32_t m = 0;
  for (int i : members) m |= 1U << (i - 1);
  return m;
}

SymElement sym_of(SymBasis b, std::initializer_list<std::pair<Partition, int>> terms) {
  SymElement x(0, b);
  bool first = true;
  for (const auto& [lambda, c] : terms) {
    if (first) x = SymElement(lambda.weight(), b);
    first = false;
    x.add(lambda, c);
  }
  return x;
}

void suite(Outcome& o, const std::string& name, int n_max) {
  const VerificationReport r = run_suite(name, n_max, 1);
  if (!r.pass()) {
    const Failure& f = r.failures.front();
    o.require(false, name + ": " + f.key + " " + f.check + " " + f.details);
  }
}

Outcome c1() {
  Outcome o;
  const SymElement got = change_basis(detect_symmetric(linear_function(poset1(4, {{1, 3}, {2, 4}}))), SymBasis::p);
  const SymElement want =
      sym_of(SymBasis::p, {{Partition{1, 1, 1, 1}, 1}, {Partition{2, 1, 1}, 4}, {Partition{2, 2}, 2}, {Partition{4}, -1}});
  o.require(got == want, "p-expansion differs");
  return o;
}

Outcome c2() {
  Outcome o;
  const SymElement got = change_basis(detect_symmetric(linear_function(poset1(3, {{2, 3}}))), SymBasis::s);
  const SymElement want = sym_of(SymBasis::s, {{Partition{3}, 3}, {Partition{2, 1}, 2}, {Partition{1, 1, 1}, -1}});
  o.require(got == want, "s-expansion differs");
  return o;
}

Outcome c3() {
  Outcome o;
  const QsymElement m1 = QsymElement::monomial(Composition{1});
  for (int n = 1; n <= 6; ++n) {
    o.require(linear_function(Poset::chain(n)) == qsym_power(m1, n), "L of a chain");
    o.require(linear_polynomial(Poset::chain(n)) == Polynomial::monomial(n), "l of a chain");
  }
  for (int n = 1; n <= 5; ++n) {
    QsymElement want(n, QBasis::M);
    for (const Composition& a : compositions(n)) want.add(a, Rational(factorial(n)));
    o.require(linear_function(Poset::antichain(n)) == want, "L of an antichain");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  const std::vector<std::uint32_t> gens{set1({1, 2}), set1({1, 3}), set1({2, 4})};
  const Plucking a = Plucking::generated_by(5, gens);
  o.require(a.size() == 8, "family size");
  o.require(is_complete(a), "completeness");
  o.require(chi(a) == 0, "chi");
  for (int n = 1; n <= 8; ++n) {
    const Plucking b = Plucking::power_set(n);
    for (std::uint32_t s = 0; s <= full_index_mask(n); ++s) o.require(chi_at(b, s) == (s == 0 ? 1 : 0), "power set chi");
  }
  return o;
}

Outcome c5() {
  Outcome o;
  auto mins = [](const Plucking& a) {
    auto v = minimal_sets(a);
    std::sort(v.begin(), v.end());
    return v;
  };
  const Poset ex1 = poset1(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}});
  const Poset two_chains = poset1(4, {{1, 3}, {2, 4}});
  auto sorted = [](std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  o.require(mins(comp_of_listing(ex1, listing1({1, 4, 2, 3}))) == sorted({set1({3}), set1({2})}), "first example");
  o.require(mins(comp_of_listing(two_chains, listing1({4, 3, 2, 1}))) == sorted({set1({2}), set1({1, 3})}),
            "second example");
  return o;
}

Outcome c6() {
  Outcome o;
  for (const char* name : {"duality", "f-direct", "p-special", "e-levelsum"}) suite(o, name, 5);
  suite(o, "multiplicativity", 6);
  for (int n = 0; n <= 4; ++n) {
    for_each_labeled_poset(n, [&](const Poset& p) {
      const QsymElement l = linear_function(p);
      o.require(l == linear_function(dual(p)), "duality (labelled)");
      const auto sym = try_detect_symmetric(l);
      o.require(sym.has_value(), "symmetry (labelled)");
      o.require(f_coefficients_direct(p) == m_to_f(l), "F-direct (labelled)");
      if (n > 0 && sym) {
        const SymElement ps = change_basis(*sym, SymBasis::p);
        const auto [a, b] = p_coeff_special(p);
        o.require(ps.coefficient(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == a && a == 1,
                  "p_(1..1) (labelled)");
        if (n >= 2) {
          std::vector<int> hook(static_cast<std::size_t>(n - 1), 1);
          hook[0] = 2;
          o.require(ps.coefficient(Partition(hook)) == b &&
                        b == Rational(incomparability_graph(p).edge_count()),
                    "p_(2,1..1) (labelled)");
        }
      }
      for (int k = 0; k <= n; ++k) {
        const auto [lhs, rhs] = e_levelsum_check(p, k);
        o.require(lhs == rhs, "e level sum (labelled)");
      }
    });
  }
  return o;
}

Outcome c7() {
  Outcome o;
  auto check = [&](const Poset& p) {
    o.require(zeta_22free(p) == Integer(oracle::linear_extensions(oracle::matrix_of(p))), "zeta");
    o.require(p_expansion_22free(p) == change_basis(detect_symmetric(linear_function(p)), SymBasis::p), "p-expansion");
  };
  int classes = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      if (is_ab_free(p, 2, 2)) {
        check(p);
        ++classes;
      }
    }
  }
  gen::Rng rng(0x22f7ee);
  int sampled = 0;
  while (sampled < 200) {
    const Poset p = gen::poset(rng, 6, rng.between(1, 4), 5);
    if (!is_ab_free(p, 2, 2)) continue;
    check(p);
    ++sampled;
  }
  o.require(classes > 0, "no classes");
  return o;
}

Outcome c8() {
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      if (!is_ab_free(p, 2, 1)) continue;
      o.require(s_expansion_21free(p) == s_coefficients_generic(p), "tableaux vs generic");
    }
  }
  return o;
}

Outcome c9() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    o.require(zeta1(Poset::chain(n)) == 1, "zeta1 of a chain");
    if (n >= 2) {
      o.require(zeta1(Poset::antichain(n)) == 0, "zeta1 of an antichain");
      o.require(phi(Poset::antichain(n)).is_zero(), "phi of an antichain");
    }
  }
  std::vector<Poset> small;
  for (int n = 1; n <= 3; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) small.push_back(p);
  }
  for (const Poset& p : small) {
    for (const Poset& q : small) {
      o.require(zeta1(ordinal_sum(p, q)) == zeta1(p) * zeta1(q), "zeta1 multiplicative");
      o.require(phi(ordinal_sum(p, q)) == phi(p) * phi(q), "phi multiplicative");
    }
  }
  for (int n = 0; n <= 5; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    for (const Poset& p : enumerate_posets(n, true)) {
      const std::int64_t z = zeta1(p);
      o.require(phi(p).chi() == Integer(z), "chi of phi");
      o.require(linear_polynomial(dual(p))(-1) == sign * Rational(z), "l at -1");
    }
  }
  return o;
}

Outcome c10() {
  Outcome o;
  gen::Rng rng(0xd16a);
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.between(1, 6);
    const auto order = rng.permutation(n);
    Digraph d(n);
    oracle::Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng.chance(2, 5)) {
          d.add_edge(order[a], order[b]);
          m[order[a]][order[b]] = true;
        }
      }
    }
    // Topological orders of the raw edge set, by brute force.
    const std::uint64_t brute = oracle::linear_extensions(m);
    o.require(zeta_digraph(d) == brute, "zeta of the digraph");
    o.require(zeta_digraph(transitive_closure(d)) == brute, "zeta of the closure");
  }
  suite(o, "digraph-closure", 6);
  return o;
}

Outcome c11() {
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      if (is_ab_free(p, 2, 2) && reversing_listings(p).empty()) o.require(zeta(p) % 2 == 0, "odd zeta");
    }
  }
  suite(o, "parity", 5);
  return o;
}

Outcome c12() {
  Outcome o;
  const ConjectureReport a1 = conjecture1_search(5, 1);
  const ConjectureReport b1 = conjecture1_search(5, 2);
  const ConjectureReport a2 = conjecture2_search(5, 1);
  const ConjectureReport b2 = conjecture2_search(5, 2);
  o.require(to_json(a1, false) == to_json(b1, false), "first search not deterministic");
  o.require(to_json(a2, false) == to_json(b2, false), "second search not deterministic");
  o.require(a1.assertion_failures.empty(), "assertion in the first search");
  o.require(a2.assertion_failures.empty(), "assertion in the second search");
  o.require(a2.listings > 0, "second search did nothing");
  o.note = o.ok ? std::to_string(a1.counterexamples.size()) + " and " + std::to_string(a2.counterexamples.size()) +
                      " counterexamples reported"
                : o.note;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"two 2-chains in the p basis", c1},
      {"2+1 in the s basis", c2},
      {"chains and antichains", c3},
      {"complete plucking with chi 0; power-set chi", c4},
      {"border-set examples", c5},
      {"property suite n <= 5, labelled n <= 4, products n <= 6", c6},
      {"(2+2)-free formulas vs brute force", c7},
      {"(2+1)-free tableaux vs generic Schur coefficients", c8},
      {"zeta1 and phi", c9},
      {"digraph closure", c10},
      {"parity of zeta with no reversing listings", c11},
      {"conjecture scans deterministic, no assertions", c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %-58s %8.2fs%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
