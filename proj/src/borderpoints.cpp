#include "posetsym/borderpoints.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "posetsym/canonical.hpp"
#include "posetsym/comb.hpp"
#include "posetsym/error.hpp"
#include "posetsym/kernels.hpp"

namespace posetsym {

namespace {

int plucking_bits(int n) { return n <= 1 ? 0 : n - 1; }

void check_ambient(int n) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  if (n > kMaxPluckingAmbient) throw SizeError("plucking ambient size above 12");
}

void check_listing(int n, std::span<const int> listing) {
  if (static_cast<int>(listing.size()) != n) throw LengthError("listing length differs from |P|");
  Mask seen = 0;
  for (int v : listing) {
    if (v < 0 || v >= n || (seen & bit(v)) != 0) throw std::invalid_argument("listing is not a permutation");
    seen |= bit(v);
  }
}

void check_member(const Plucking& a, std::uint32_t s) {
  if (!a.contains(s)) throw NotMember("set is not a member of the plucking");
}

std::vector<std::int64_t> signed_dense(const Plucking& a) {
  const auto& member = a.indicator();
  std::vector<std::int64_t> dense(member.begin(), member.end());
  kernels::subset_mobius(dense);
  return dense;
}

bool is_complete_listing(const Poset& p, const Listing& w) { return is_complete(comp_of_listing(p, w)); }

}  // namespace

Plucking Plucking::from_members(int n, std::span<const std::uint32_t> members) {
  check_ambient(n);
  if (members.empty()) throw EmptyError("a plucking is nonempty");
  const int bits = plucking_bits(n);
  std::vector<std::uint8_t> member(std::size_t{1} << bits, 0);
  for (std::uint32_t s : members) {
    if ((s & ~full_index_mask(n)) != 0) throw IndexError("member outside [n-1]");
    member[s] = 1;
  }
  for (std::size_t s = 0; s < member.size(); ++s) {
    if (!member[s]) continue;
    for (int i = 0; i < bits; ++i) {
      if (!member[s | (std::size_t{1} << i)]) throw std::invalid_argument("family is not upward closed");
    }
  }
  return Plucking(n, std::move(member));
}

Plucking Plucking::generated_by(int n, std::span<const std::uint32_t> generators) {
  check_ambient(n);
  if (generators.empty()) throw EmptyError("a plucking needs at least one generator");
  const int bits = plucking_bits(n);
  std::vector<std::uint8_t> member(std::size_t{1} << bits, 0);
  for (std::uint32_t s : generators) {
    if ((s & ~full_index_mask(n)) != 0) throw IndexError("generator outside [n-1]");
    member[s] = 1;
  }
  for (std::size_t s = 0; s < member.size(); ++s) {
    if (!member[s]) continue;
    for (int i = 0; i < bits; ++i) member[s | (std::size_t{1} << i)] = 1;
  }
  return Plucking(n, std::move(member));
}

Plucking Plucking::power_set(int n) {
  check_ambient(n);
  return Plucking(n, std::vector<std::uint8_t>(std::size_t{1} << plucking_bits(n), 1));
}

std::uint32_t Plucking::full_set() const { return full_index_mask(n_); }

std::vector<std::uint32_t> Plucking::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t s = 0; s < member_.size(); ++s) {
    if (member_[s]) out.push_back(static_cast<std::uint32_t>(s));
  }
  return out;
}

std::size_t Plucking::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), std::uint8_t{1}));
}

Plucking comp_of_listing(const Poset& p, std::span<const int> listing) {
  const int n = p.size();
  check_listing(n, listing);
  check_ambient(n);
  // Each inverted pair at positions i < j must be separated by a cut c with
  // i < c <= j; cut c is member c of the index set, i.e. bit c-1.
  std::vector<std::uint32_t> intervals;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (p.less(listing[j], listing[i])) {
        intervals.push_back(static_cast<std::uint32_t>(((std::uint64_t{1} << j) - 1) & ~((std::uint64_t{1} << i) - 1)));
      }
    }
  }
  std::vector<std::uint8_t> member(std::size_t{1} << plucking_bits(n), 0);
  for (std::size_t s = 0; s < member.size(); ++s) {
    bool ok = true;
    for (std::uint32_t iv : intervals) {
      if ((s & iv) == 0) {
        ok = false;
        break;
      }
    }
    member[s] = ok ? 1 : 0;
  }
  return Plucking::from_members(n, [&] {
    std::vector<std::uint32_t> m;
    for (std::size_t s = 0; s < member.size(); ++s) {
      if (member[s]) m.push_back(static_cast<std::uint32_t>(s));
    }
    return m;
  }());
}

std::vector<std::uint32_t> minimal_sets(const Plucking& a) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : a.members()) {
    bool minimal = true;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      if (a.contains(s & ~(rest & -rest))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

bool is_complete(const Plucking& a) {
  std::uint32_t cover = 0;
  for (std::uint32_t m : minimal_sets(a)) cover |= m;
  return cover == a.full_set();
}

std::int64_t chi_at(const Plucking& a, std::uint32_t s) {
  check_member(a, s);
  std::int64_t total = 0;
  // Walk every submask of s, including s and the empty set.
  for (std::uint32_t t = s;; t = (t - 1) & s) {
    if (a.contains(t)) total += ((popcount(s) - popcount(t)) % 2 == 0) ? 1 : -1;
    if (t == 0) break;
  }
  return total;
}

std::int64_t chi(const Plucking& a) { return chi_at(a, a.full_set()); }

std::vector<std::int64_t> chi_all(const Plucking& a) { return signed_dense(a); }

std::int64_t chi_at_by_depth(const Plucking& a, std::uint32_t s) {
  check_member(a, s);
  std::vector<std::uint32_t> below;
  for (std::uint32_t t : a.members()) {
    if ((t & ~s) == 0) below.push_back(t);
  }
  if (below.size() > static_cast<std::size_t>(kMaxGroundSet)) throw SizeError("mountain above 64 elements");
  std::vector<Mask> up(below.size(), 0);
  for (std::size_t i = 0; i < below.size(); ++i) {
    for (std::size_t j = 0; j < below.size(); ++j) {
      if (i != j && (below[i] & ~below[j]) == 0) up[i] |= bit(static_cast<int>(j));
    }
  }
  return chi_mountain(Mountain(Poset::from_up_sets(std::move(up))));
}

bool vanishing_check(const Plucking& a, std::uint32_t s) {
  check_member(a, s);
  std::uint32_t cover = 0;
  for (std::uint32_t m : minimal_sets(a)) cover |= m;
  return (s & ~cover) != 0;
}

std::vector<Listing> reversing_listings(const Poset& p) {
  const int n = p.size();
  const Mask minimal = p.minimal_elements();
  const Mask maximal = p.maximal_elements();
  std::vector<Listing> out;
  Listing w;
  std::function<void(Mask)> extend = [&](Mask rest) {
    if (rest == 0) {
      if (is_complete_listing(p, w)) out.push_back(w);
      return;
    }
    Mask choices = rest;
    if (w.empty() && n > 1) choices &= ~minimal;
    // The last element may not be maximal, so something non-maximal has to
    // remain until the end.
    for_each_bit(choices, [&](int v) {
      const Mask after = rest & ~bit(v);
      if (after != 0 && (after & ~maximal) == 0) return;
      w.push_back(v);
      extend(after);
      w.pop_back();
    });
  };
  extend(p.ground());
  return out;
}

std::int64_t zeta1(const Poset& p) {
  std::int64_t total = 0;
  for (const Listing& w : reversing_listings(p)) total += chi(comp_of_listing(p, w));
  return total;
}

Mountain::Mountain(Poset p) : poset_(std::move(p)) {
  const int n = poset_.size();
  const Mask maximal = poset_.maximal_elements();
  if (n == 0 || popcount(maximal) != 1) throw std::invalid_argument("a mountain has exactly one maximal element");
  top_ = std::countr_zero(maximal);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return popcount(poset_.up(x)) < popcount(poset_.up(y)); });
  depth_.assign(static_cast<std::size_t>(n), 0);
  int height = 0;
  for (int v : order) {
    int d = 0;
    for_each_bit(poset_.up(v), [&](int q) { d = std::max(d, depth_[q] + 1); });
    depth_[v] = d;
    height = std::max(height, d);
  }
  f_vector_.assign(static_cast<std::size_t>(height + 1), 0);
  for (int d : depth_) ++f_vector_[d];
}

Mountain mountain_from_plucking(const Plucking& a) {
  const std::vector<std::uint32_t> sets = a.members();
  if (sets.size() > static_cast<std::size_t>(kMaxGroundSet)) throw SizeError("plucking with more than 64 members");
  std::vector<Mask> up(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && (sets[i] & ~sets[j]) == 0) up[i] |= bit(static_cast<int>(j));
    }
  }
  return Mountain(Poset::from_up_sets(std::move(up)));
}

std::vector<std::int64_t> f_vector(const Mountain& m) { return m.f_vector(); }

std::int64_t chi_mountain(const Mountain& m) {
  std::int64_t total = 0;
  for (int v = 0; v < m.poset().size(); ++v) total += (m.depth(v) % 2 == 0) ? 1 : -1;
  return total;
}

std::int64_t chi_from_fvector(std::span<const std::int64_t> f) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) total += (i % 2 == 0) ? f[i] : -f[i];
  return total;
}

void MountainSum::add(const Mountain& m, const Integer& multiplicity) {
  if (multiplicity == 0) return;
  CanonicalForm form = canonical_form(m.poset());
  auto it = terms_.find(form.key);
  if (it == terms_.end()) {
    terms_.emplace(form.key, Entry{Mountain(std::move(form.poset)), multiplicity});
    return;
  }
  it->second.multiplicity += multiplicity;
  if (it->second.multiplicity == 0) terms_.erase(it);
}

Integer MountainSum::total_multiplicity() const {
  Integer total = 0;
  for (const auto& [key, e] : terms_) total += e.multiplicity;
  return total;
}

Integer MountainSum::chi() const {
  Integer total = 0;
  for (const auto& [key, e] : terms_) total += e.multiplicity * chi_mountain(e.representative);
  return total;
}

bool MountainSum::operator==(const MountainSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.multiplicity != b->second.multiplicity) return false;
  }
  return true;
}

MountainSum operator*(const MountainSum& a, const MountainSum& b) {
  MountainSum out;
  for (const auto& [ka, ea] : a.terms_) {
    for (const auto& [kb, eb] : b.terms_) {
      out.add(Mountain(cartesian_product(ea.representative.poset(), eb.representative.poset())),
              ea.multiplicity * eb.multiplicity);
    }
  }
  return out;
}

MountainSum phi(const Poset& p) {
  MountainSum out;
  for (const Listing& w : reversing_listings(p)) out.add(mountain_from_plucking(comp_of_listing(p, w)));
  return out;
}

bool comp_duality_check(const Poset& p, std::uint32_t s) {
  const int n = p.size();
  if ((s & ~full_index_mask(n)) != 0) throw IndexError("set outside [n-1]");
  const Poset d = dual(p);
  const std::uint32_t s_op = opposite_mask(n, s);
  std::set<Listing> left;
  std::set<Listing> right;
  Listing w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  do {
    if (comp_of_listing(p, w).contains(s)) left.insert(w);
    if (comp_of_listing(d, w).contains(s_op)) right.insert(reverse(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return left == right;
}

bool realizability_necessary(const Plucking& a) {
  const int n = a.ambient();
  const std::vector<std::uint32_t> mins = minimal_sets(a);
  std::uint32_t common = a.full_set();
  for (std::uint32_t m : mins) common &= m;
  auto set_of_members = [](std::initializer_list<int> elems) {
    std::uint32_t s = 0;
    for (int e : elems) s |= std::uint32_t{1} << (e - 1);
    return s;
  };
  auto forces = [&](std::uint32_t pattern, int l) {
    for (std::uint32_t m : mins) {
      if ((m & pattern) == pattern && ((common >> (l - 1)) & 1U) == 0) return false;
    }
    return true;
  };
  if (n >= 3 && !forces(set_of_members({1, 2}), 1)) return false;
  if (n >= 3 && !forces(set_of_members({n - 2, n - 1}), n - 1)) return false;
  for (int l = 2; l <= n - 2; ++l) {
    if (!forces(set_of_members({l - 1, l, l + 1}), l)) return false;
  }
  return true;
}

nlohmann::json to_json(const MountainSum& sum) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, e] : sum.terms()) {
    nlohmann::json mult;
    if (e.multiplicity <= std::numeric_limits<std::int64_t>::max() &&
        e.multiplicity >= std::numeric_limits<std::int64_t>::min()) {
      mult = e.multiplicity.convert_to<std::int64_t>();
    } else {
      mult = to_string(e.multiplicity);
    }
    out.push_back({{"fvector", e.representative.f_vector()}, {"multiplicity", mult}, {"key", key}});
  }
  return out;
}

nlohmann::json to_json(const Plucking& a) {
  nlohmann::json members = nlohmann::json::array();
  for (std::uint32_t s : a.members()) members.push_back(IndexSet{a.ambient(), s}.elements());
  return {{"n", a.ambient()}, {"members", members}};
}

}  // namespace posetsym
