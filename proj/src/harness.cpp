#include "posetsym/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "posetsym/borderpoints.hpp"
#include "posetsym/canonical.hpp"
#include "posetsym/comb.hpp"
#include "posetsym/error.hpp"
#include "posetsym/linfun.hpp"
#include "posetsym/qsym.hpp"
#include "posetsym/sym.hpp"
#include "posetsym/text_io.hpp"

namespace posetsym {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// FNV-1a; fixed across platforms so shards are reproducible.
std::uint64_t shard_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_down_closed(const std::vector<Mask>& down, Mask d) {
  bool ok = true;
  for_each_bit(d, [&](int x) { ok = ok && (down[x] & ~d) == 0; });
  return ok;
}

bool is_up_closed(const std::vector<Mask>& up, Mask u) {
  bool ok = true;
  for_each_bit(u, [&](int x) { ok = ok && (up[x] & ~u) == 0; });
  return ok;
}

void extend_labeled(int n, std::vector<Mask>& up, std::vector<Mask>& down,
                    const std::function<void(const Poset&)>& visit) {
  const int k = static_cast<int>(up.size());
  if (k == n) {
    visit(Poset::from_up_sets(up));
    return;
  }
  const Mask all = full_mask(k);
  for (Mask d = 0; d <= all; ++d) {
    if (!is_down_closed(down, d)) continue;
    Mask above_all = all & ~d;
    for_each_bit(d, [&](int x) { above_all &= up[x]; });
    // Every up-set inside `above_all`, including the empty one.
    for (Mask u = above_all;; u = (u - 1) & above_all) {
      if (is_up_closed(up, u)) {
        std::vector<Mask> up2 = up;
        std::vector<Mask> down2 = down;
        for_each_bit(d, [&](int x) { up2[x] |= bit(k); });
        for_each_bit(u, [&](int x) { down2[x] |= bit(k); });
        up2.push_back(u);
        down2.push_back(d);
        extend_labeled(n, up2, down2, visit);
      }
      if (u == 0) break;
    }
  }
}

std::recursive_mutex iso_mutex;
std::map<int, std::vector<Poset>> iso_cache;

const std::vector<Poset>& iso_classes(int n) {
  std::lock_guard<std::recursive_mutex> lock(iso_mutex);
  if (auto it = iso_cache.find(n); it != iso_cache.end()) return it->second;
  std::vector<Poset> out;
  if (n == 0) {
    out.push_back(Poset());
  } else {
    const std::vector<Poset>& smaller = iso_classes(n - 1);
    // Removing a maximal element leaves a poset on n-1 elements, so adding
    // a new maximal element above every down-set reaches every class.
    std::map<std::string, Poset> found;
    for (const Poset& base : smaller) {
      std::vector<Mask> up(static_cast<std::size_t>(n - 1));
      std::vector<Mask> down(static_cast<std::size_t>(n - 1));
      for (int i = 0; i < n - 1; ++i) {
        up[i] = base.up(i);
        down[i] = base.down(i);
      }
      for (Mask d = 0; d <= full_mask(n - 1); ++d) {
        if (!is_down_closed(down, d)) continue;
        std::vector<Mask> up2 = up;
        for_each_bit(d, [&](int x) { up2[x] |= bit(n - 1); });
        up2.push_back(0);
        CanonicalForm form = canonical_form(Poset::from_up_sets(std::move(up2)));
        found.try_emplace(form.key, std::move(form.poset));
      }
    }
    for (auto& [key, p] : found) out.push_back(std::move(p));
  }
  return iso_cache.emplace(n, std::move(out)).first->second;
}

struct Item {
  std::string key;
  const Poset* p = nullptr;
  const Poset* q = nullptr;
  std::uint64_t index = 0;
};

using Check = std::function<void(const Item&, std::vector<Failure>&)>;

std::vector<Failure> run_sharded(const std::vector<Item>& items, int jobs, const Check& check) {
  jobs = std::max(1, jobs);
  std::vector<std::vector<Failure>> found(static_cast<std::size_t>(jobs));
  auto worker = [&](int w) {
    for (const Item& item : items) {
      if (shard_hash(item.key) % static_cast<std::uint64_t>(jobs) != static_cast<std::uint64_t>(w)) continue;
      try {
        check(item, found[w]);
      } catch (const std::exception& e) {
        found[w].push_back({item.key, "exception", e.what()});
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  std::vector<Failure> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Item> single_items(int n_max) {
  std::vector<Item> items;
  for (int n = 0; n <= n_max; ++n) {
    for (const Poset& p : iso_classes(n)) items.push_back({encode_key(p), &p, nullptr, 0});
  }
  return items;
}

// Ordered pairs of nonempty classes with |P| + |Q| <= n_max.
std::vector<Item> pair_items(int n_max) {
  std::vector<Item> items;
  for (int a = 1; a < n_max; ++a) {
    for (int b = 1; a + b <= n_max; ++b) {
      for (const Poset& p : iso_classes(a)) {
        for (const Poset& q : iso_classes(b)) items.push_back({encode_key(p) + "*" + encode_key(q), &p, &q, 0});
      }
    }
  }
  return items;
}

void expect(bool ok, const Item& item, const char* check, const std::string& details, std::vector<Failure>& out) {
  if (!ok) out.push_back({item.key, check, details});
}

std::string show(const QsymElement& x) { return to_json(x).dump(); }
std::string show(const SymElement& x) { return to_json(x).dump(); }

Partition hook(int k, int n) {
  std::vector<int> parts{k};
  for (int i = k; i < n; ++i) parts.push_back(1);
  return Partition(parts);
}

std::vector<Listing> all_listings(int n) {
  std::vector<Listing> out;
  Listing w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

void check_duality(const Item& it, std::vector<Failure>& out) {
  const QsymElement l = linear_function(*it.p);
  const QsymElement ld = linear_function(dual(*it.p));
  expect(l == ld, it, "L_P = L_P*", show(l) + " vs " + show(ld), out);
  expect(zeta(*it.p) == zeta(dual(*it.p)), it, "zeta(P) = zeta(P*)", "", out);
}

void check_multiplicativity(const Item& it, std::vector<Failure>& out) {
  const Poset pq = ordinal_sum(*it.p, *it.q);
  const QsymElement lhs = linear_function(pq);
  const QsymElement rhs = qsym_product(linear_function(*it.p), linear_function(*it.q));
  expect(lhs == rhs, it, "L_PQ = L_P L_Q", show(lhs) + " vs " + show(rhs), out);
  expect(zeta(pq) == zeta(*it.p) * zeta(*it.q), it, "zeta(PQ) = zeta(P) zeta(Q)", "", out);
}

void check_f_direct(const Item& it, std::vector<Failure>& out) {
  const QsymElement l = linear_function(*it.p);
  const QsymElement direct = f_coefficients_direct(*it.p);
  const QsymElement converted = m_to_f(l);
  expect(direct == converted, it, "F-direct = M->F", show(direct) + " vs " + show(converted), out);
  expect(direct.coefficient_of_set(0) == Rational(Integer(zeta(*it.p))), it, "[F_empty] = zeta", "", out);
  expect(try_detect_symmetric(l).has_value(), it, "L_P symmetric", show(l), out);
}

void check_p_special(const Item& it, std::vector<Failure>& out) {
  const int n = it.p->size();
  if (n == 0) return;
  const auto [ones, pairs] = p_coeff_special(*it.p);
  const SymElement p = change_basis(detect_symmetric(linear_function(*it.p)), SymBasis::p);
  expect(p.coefficient(hook(1, n)) == ones, it, "[p_1^n] = 1", show(p), out);
  if (n >= 2) expect(p.coefficient(hook(2, n)) == pairs, it, "[p_21^(n-2)] = |E|", show(p), out);
}

void check_22free(const Item& it, std::vector<Failure>& out) {
  const Poset& p = *it.p;
  if (!is_ab_free(p, 2, 2)) return;
  expect(zeta_22free(p) == Integer(zeta(p)), it, "stable-partition zeta", "", out);
  const SymElement direct = p_expansion_22free(p);
  const SymElement converted = change_basis(detect_symmetric(linear_function(p)), SymBasis::p);
  expect(direct == converted, it, "clique-cycle p-expansion", show(direct) + " vs " + show(converted), out);
  int widest = 0;
  for (const auto& [lambda, c] : direct.terms()) {
    expect(c > 0 && is_integral(c), it, "p-positive and integral", show(direct), out);
    if (lambda.length() == 0) continue;
    if (lambda.length() == 1 || lambda[1] == 1) widest = std::max(widest, lambda[0]);
  }
  if (p.size() > 0) {
    expect(widest == largest_antichain_size(p), it, "clique number from hooks",
           std::to_string(widest) + " vs " + std::to_string(largest_antichain_size(p)), out);
  }
}

void check_21free(const Item& it, std::vector<Failure>& out) {
  const Poset& p = *it.p;
  if (!is_ab_free(p, 2, 1)) return;
  const SymElement tableaux = s_expansion_21free(p);
  const SymElement generic = s_coefficients_generic(p);
  const SymElement converted = change_basis(detect_symmetric(linear_function(p)), SymBasis::s);
  expect(tableaux == generic, it, "tableaux = Jacobi-Trudi sum", show(tableaux) + " vs " + show(generic), out);
  expect(generic == converted, it, "Jacobi-Trudi sum = basis change", show(generic) + " vs " + show(converted), out);
  int longest = 0;
  for (const auto& [lambda, c] : tableaux.terms()) {
    expect(c > 0, it, "s-positive", show(tableaux), out);
    longest = std::max(longest, lambda.length());
  }
  expect(longest == longest_chain_size(p), it, "s-support length = chain size",
         std::to_string(longest) + " vs " + std::to_string(longest_chain_size(p)), out);
}

void check_e_levelsum(const Item& it, std::vector<Failure>& out) {
  for (int k = 0; k <= it.p->size(); ++k) {
    const auto [lhs, rhs] = e_levelsum_check(*it.p, k);
    expect(lhs == rhs, it, "e-levelsum", "k=" + std::to_string(k) + ": " + to_string(lhs) + " vs " + to_string(rhs),
           out);
  }
}

void check_zeta1(const Item& it, std::vector<Failure>& out) {
  const Poset& p = *it.p;
  const int n = p.size();
  std::vector<Listing> brute;
  for (const Listing& w : all_listings(n)) {
    if (is_complete(comp_of_listing(p, w))) brute.push_back(w);
  }
  const std::vector<Listing> rev = reversing_listings(p);
  expect(brute == rev, it, "Rev(P) pruning", std::to_string(brute.size()) + " vs " + std::to_string(rev.size()), out);
  if (n > 1) {
    for (const Listing& w : rev) {
      expect(!((p.minimal_elements() >> w.front()) & 1U) && !((p.maximal_elements() >> w.back()) & 1U), it,
             "reversing ends", format_listing(w), out);
    }
  }
  const std::int64_t z1 = zeta1(p);
  const Poset d = dual(p);
  const Rational sign = (n % 2 == 0) ? 1 : -1;
  const Rational antipode = sign * qsym_antipode(linear_function(d)).coefficient_of_set(0);
  expect(antipode == Rational(z1), it, "zeta1 = (-1)^n [F_empty] S(L_P*)", to_string(antipode), out);
  const Rational at_minus_one = linear_polynomial(d)(-1);
  expect(at_minus_one == sign * z1, it, "l_P*(-1) = (-1)^n zeta1", to_string(at_minus_one), out);
  for (const Poset& factor : irreducible_factorization(p)) {
    if (factor.size() >= 2 && factor.relation_count() == 0) {
      expect(rev.empty(), it, "discrete factor empties Rev", "", out);
    }
  }
}

void check_zeta1_pair(const Item& it, std::vector<Failure>& out) {
  const std::int64_t lhs = zeta1(ordinal_sum(*it.p, *it.q));
  const std::int64_t rhs = zeta1(*it.p) * zeta1(*it.q);
  expect(lhs == rhs, it, "zeta1 multiplicative", std::to_string(lhs) + " vs " + std::to_string(rhs), out);
}

void check_phi(const Item& it, std::vector<Failure>& out) {
  const MountainSum s = phi(*it.p);
  expect(s.chi() == Integer(zeta1(*it.p)), it, "chi(Phi(P)) = zeta1(P)", to_string(s.chi()), out);
  for (const auto& [key, e] : s.terms()) {
    expect(chi_mountain(e.representative) == chi_from_fvector(e.representative.f_vector()), it,
           "chi from f-vector", key, out);
  }
}

void check_phi_pair(const Item& it, std::vector<Failure>& out) {
  const MountainSum lhs = phi(ordinal_sum(*it.p, *it.q));
  const MountainSum rhs = phi(*it.p) * phi(*it.q);
  expect(lhs == rhs, it, "Phi multiplicative", to_json(lhs).dump() + " vs " + to_json(rhs).dump(), out);
}

void check_parity(const Item& it, std::vector<Failure>& out) {
  const Poset& p = *it.p;
  if (p.size() == 0 || !is_ab_free(p, 2, 2) || !reversing_listings(p).empty()) return;
  expect(zeta(p) % 2 == 0, it, "even zeta", std::to_string(zeta(p)), out);
}

void check_comp_duality(const Item& it, std::vector<Failure>& out) {
  const int n = it.p->size();
  for (std::uint32_t s = 0; s <= full_index_mask(n); ++s) {
    expect(comp_duality_check(*it.p, s), it, "Comp duality", "S=" + nlohmann::json(IndexSet{n, s}.elements()).dump(),
           out);
  }
}

void check_realizability(const Item& it, std::vector<Failure>& out) {
  const Poset& p = *it.p;
  for (const Listing& w : all_listings(p.size())) {
    const Plucking a = comp_of_listing(p, w);
    expect(realizability_necessary(a), it, "necessary conditions", format_listing(w), out);
    const std::vector<std::int64_t> fast = chi_all(a);
    for (std::uint32_t s : a.members()) {
      const std::int64_t c = chi_at(a, s);
      expect(c == fast[s], it, "chi kernel", format_listing(w), out);
      expect(c == chi_at_by_depth(a, s), it, "chi by depth", format_listing(w), out);
      if (vanishing_check(a, s)) expect(c == 0, it, "vanishing", format_listing(w), out);
    }
  }
}

std::vector<Failure> run_digraph_closure(int n_max, std::uint64_t& checked) {
  constexpr int kSamples = 1000;
  std::mt19937_64 rng(0x5eed2024ULL);
  std::vector<Failure> out;
  for (int i = 0; i < kSamples; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n_max)));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Digraph d(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 5 < 2) d.add_edge(order[a], order[b]);
      }
    }
    const std::uint64_t z = zeta_digraph(d);
    const std::uint64_t zc = zeta_digraph(transitive_closure(d));
    const std::uint64_t zp = zeta(poset_of_digraph(d));
    if (z != zc || z != zp) {
      out.push_back({"digraph#" + std::to_string(i), "zeta(D) = zeta(D_c)",
                     std::to_string(z) + " " + std::to_string(zc) + " " + std::to_string(zp)});
    }
    ++checked;
  }
  return out;
}

void check_range(int n_max, int limit) {
  if (n_max < 0) throw std::invalid_argument("negative size bound");
  if (n_max > limit) throw SizeError("size bound above " + std::to_string(limit));
}

}  // namespace

void for_each_labeled_poset(int n, const std::function<void(const Poset&)>& visit) {
  check_range(n, kMaxLabeledEnumeration);
  std::vector<Mask> up;
  std::vector<Mask> down;
  extend_labeled(n, up, down, visit);
}

std::vector<Poset> enumerate_posets(int n, bool up_to_iso) {
  if (up_to_iso) {
    check_range(n, kMaxIsoEnumeration);
    return iso_classes(n);
  }
  std::vector<Poset> out;
  for_each_labeled_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_labeled_posets(int n) {
  std::uint64_t count = 0;
  for_each_labeled_poset(n, [&](const Poset&) { ++count; });
  return count;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"duality",      "multiplicativity", "f-direct", "p-special",
                                              "22free",       "21free",           "e-levelsum",
                                              "digraph-closure", "zeta1",         "phi",      "parity",
                                              "comp-duality", "realizability"};
  return names;
}

VerificationReport run_suite(const std::string& suite, int n_max, int jobs) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UnknownSuite("unknown suite: " + suite);
  check_range(n_max, kMaxLabeledEnumeration);
  const auto start = Clock::now();
  VerificationReport r;
  r.suite = suite;
  r.n_max = n_max;

  auto singles = [&](const Check& c) {
    const auto items = single_items(n_max);
    r.checked += items.size();
    auto f = run_sharded(items, jobs, c);
    r.failures.insert(r.failures.end(), f.begin(), f.end());
  };
  auto pairs = [&](const Check& c) {
    const auto items = pair_items(n_max);
    r.checked += items.size();
    auto f = run_sharded(items, jobs, c);
    r.failures.insert(r.failures.end(), f.begin(), f.end());
  };

  if (suite == "duality") {
    singles(check_duality);
  } else if (suite == "multiplicativity") {
    pairs(check_multiplicativity);
  } else if (suite == "f-direct") {
    singles(check_f_direct);
  } else if (suite == "p-special") {
    singles(check_p_special);
  } else if (suite == "22free") {
    singles(check_22free);
  } else if (suite == "21free") {
    singles(check_21free);
  } else if (suite == "e-levelsum") {
    singles(check_e_levelsum);
  } else if (suite == "digraph-closure") {
    r.failures = run_digraph_closure(n_max, r.checked);
  } else if (suite == "zeta1") {
    singles(check_zeta1);
    pairs(check_zeta1_pair);
  } else if (suite == "phi") {
    singles(check_phi);
    pairs(check_phi_pair);
  } else if (suite == "parity") {
    singles(check_parity);
  } else if (suite == "comp-duality") {
    singles(check_comp_duality);
  } else {
    singles(check_realizability);
  }
  std::sort(r.failures.begin(), r.failures.end());
  r.elapsed_seconds = seconds_since(start);
  return r;
}

ConjectureReport conjecture1_search(int n_max, int jobs) {
  check_range(n_max, kMaxConjectureScan);
  const auto start = Clock::now();
  ConjectureReport r;
  r.id = 1;
  r.n_max = n_max;
  const auto items = single_items(n_max);
  std::mutex m;
  const auto failures = run_sharded(items, jobs, [&](const Item& it, std::vector<Failure>& out) {
    std::uint64_t listings = 0;
    for (const Listing& w : reversing_listings(*it.p)) {
      ++listings;
      if (chi(comp_of_listing(*it.p, w)) == 0) out.push_back({it.key, "chi = 0", format_listing(w)});
    }
    std::lock_guard<std::mutex> lock(m);
    r.listings += listings;
  });
  r.posets = items.size();
  for (const Failure& f : failures) {
    if (f.check == "exception") {
      r.assertion_failures.push_back(f);
    } else {
      r.counterexamples.push_back({f.key, f.details});
    }
  }
  r.elapsed_seconds = seconds_since(start);
  return r;
}

ConjectureReport conjecture2_search(int n_max, int jobs) {
  check_range(n_max, kMaxConjectureScan);
  const auto start = Clock::now();
  ConjectureReport r;
  r.id = 2;
  r.n_max = n_max;
  const auto items = single_items(n_max);
  std::mutex m;
  const auto failures = run_sharded(items, jobs, [&](const Item& it, std::vector<Failure>& out) {
    const int n = it.p->size();
    std::map<Plucking, std::uint64_t> buckets;
    std::uint64_t listings = 0;
    for (const Listing& w : all_listings(n)) {
      ++buckets[comp_of_listing(*it.p, w)];
      ++listings;
    }
    std::uint64_t total = 0;
    std::uint64_t smallest = listings;
    for (const auto& [a, l] : buckets) {
      total += l;
      smallest = std::min(smallest, l);
    }
    const Integer aut = automorphism_count(*it.p);
    if (Integer(total) != factorial(n)) {
      out.push_back({it.key, "assert: sum l_i = n!", std::to_string(total)});
    }
    if (aut > smallest) {
      out.push_back({it.key, "assert: A(P) <= l_i", to_string(aut) + " > " + std::to_string(smallest)});
    }
    if (aut != smallest) {
      out.push_back({it.key, "A(P) = min l_i",
                     "A=" + to_string(aut) + " min=" + std::to_string(smallest) +
                         " buckets=" + std::to_string(buckets.size())});
    }
    std::lock_guard<std::mutex> lock(m);
    r.listings += listings;
  });
  r.posets = items.size();
  for (const Failure& f : failures) {
    if (f.check == "A(P) = min l_i") {
      r.counterexamples.push_back({f.key, f.details});
    } else {
      r.assertion_failures.push_back(f);
    }
  }
  r.elapsed_seconds = seconds_since(start);
  return r;
}

std::vector<RevRow> rev_scan(int n_max, int jobs) {
  check_range(n_max, kMaxLabeledEnumeration);
  const auto items = single_items(n_max);
  std::vector<RevRow> rows(items.size());
  std::vector<Item> indexed = items;
  for (std::size_t i = 0; i < indexed.size(); ++i) indexed[i].index = i;
  const auto failures = run_sharded(indexed, jobs, [&](const Item& it, std::vector<Failure>&) {
    RevRow row;
    row.key = it.key;
    row.n = it.p->size();
    row.reversing = reversing_listings(*it.p).size();
    row.zeta1 = zeta1(*it.p);
    const MountainSum s = phi(*it.p);
    if (s.is_zero()) {
      row.phi_summary = "0";
    } else {
      for (const auto& [key, e] : s.terms()) {
        if (!row.phi_summary.empty()) row.phi_summary += " + ";
        row.phi_summary += to_string(e.multiplicity) + "*" + nlohmann::json(e.representative.f_vector()).dump();
      }
    }
    rows[it.index] = std::move(row);  // distinct slots per item
  });
  if (!failures.empty()) throw std::runtime_error("rev scan failed on " + failures.front().key + ": " +
                                                  failures.front().details);
  return rows;
}

void write_tsv(std::ostream& out, const std::vector<RevRow>& rows) {
  out << "key\tn\trev\tzeta1\tphi\n";
  for (const RevRow& r : rows) {
    out << r.key << '\t' << r.n << '\t' << r.reversing << '\t' << r.zeta1 << '\t' << r.phi_summary << '\n';
  }
}

nlohmann::json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures) failures.push_back({{"key", f.key}, {"check", f.check}, {"details", f.details}});
  nlohmann::json j{{"suite", r.suite},   {"n_max", r.n_max},         {"checked", r.checked},
                   {"pass", r.pass()},   {"failures", failures}};
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

nlohmann::json to_json(const ConjectureReport& r, bool with_timing) {
  nlohmann::json cex = nlohmann::json::array();
  for (const Counterexample& c : r.counterexamples) cex.push_back({{"key", c.key}, {"witness", c.witness}});
  nlohmann::json asserts = nlohmann::json::array();
  for (const Failure& f : r.assertion_failures) {
    asserts.push_back({{"key", f.key}, {"check", f.check}, {"details", f.details}});
  }
  nlohmann::json j{{"conjecture", r.id},   {"n_max", r.n_max},        {"posets", r.posets},
                   {"listings", r.listings}, {"counterexamples", cex}, {"assertion_failures", asserts}};
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace posetsym
