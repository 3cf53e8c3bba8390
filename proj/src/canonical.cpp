#include "posetsym/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace posetsym {

namespace {

// Vertex-coloured strict order used during the search: the twin quotient.
struct Quotient {
  std::vector<Mask> up;
  std::vector<Mask> down;
  int size() const { return static_cast<int>(up.size()); }
};

int compress(std::vector<int>& col) {
  std::vector<int> values = col;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& c : col) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  return static_cast<int>(values.size());
}

// Colour refinement to the coarsest equitable partition finer than `col`.
// New colours are ranks of signatures, so the result is labelling-invariant
// and cells keep their relative order.
int refine(const Quotient& q, std::vector<int>& col) {
  const int k = q.size();
  int classes = compress(col);
  using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<Signature> sig(static_cast<std::size_t>(k));
  while (true) {
    for (int v = 0; v < k; ++v) {
      std::vector<int> ups;
      std::vector<int> downs;
      for_each_bit(q.up[v], [&](int u) { ups.push_back(col[u]); });
      for_each_bit(q.down[v], [&](int u) { downs.push_back(col[u]); });
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig[v] = Signature{col[v], std::move(ups), std::move(downs)};
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) == classes) return classes;
    for (int v = 0; v < k; ++v) {
      col[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    classes = static_cast<int>(distinct.size());
  }
}

struct Search {
  const Quotient& q;
  std::vector<Mask> best;
  std::vector<int> best_labels;
  Integer leaves_at_best = 0;

  void leaf(const std::vector<int>& col) {
    std::vector<Mask> enc(static_cast<std::size_t>(q.size()), 0);
    for (int v = 0; v < q.size(); ++v) {
      for_each_bit(q.up[v], [&](int u) { enc[col[v]] |= bit(col[u]); });
    }
    if (best_labels.empty() || enc < best) {
      best = std::move(enc);
      best_labels = col;
      leaves_at_best = 1;
    } else if (enc == best) {
      leaves_at_best += 1;
    }
  }

  void explore(std::vector<int> col) {
    const int classes = refine(q, col);
    if (classes == q.size()) {
      leaf(col);
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(classes), 0);
    for (int c : col) ++cell_size[c];
    int target = 0;
    while (cell_size[target] < 2) ++target;
    for (int v = 0; v < q.size(); ++v) {
      if (col[v] != target) continue;
      std::vector<int> next(col.size());
      for (int x = 0; x < q.size(); ++x) next[x] = 2 * col[x] + ((col[x] == target && x != v) ? 1 : 0);
      explore(std::move(next));
    }
  }
};

}  // namespace

std::string encode_key(const Poset& p) {
  static constexpr char kHex[] = "0123456789abcdef";
  const int n = p.size();
  std::string key = std::to_string(n) + ":";
  int nibble = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      nibble = (nibble << 1) | (p.less(i, j) ? 1 : 0);
      if (++filled == 4) {
        key.push_back(kHex[nibble]);
        nibble = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) key.push_back(kHex[nibble << (4 - filled)]);
  return key;
}

CanonicalForm canonical_form(const Poset& p) {
  const int n = p.size();
  // Twin classes: identical (up, down) pairs. Such elements are pairwise
  // incomparable and every permutation of a class is an automorphism.
  std::map<std::pair<Mask, Mask>, std::vector<int>> by_neighbourhood;
  for (int i = 0; i < n; ++i) by_neighbourhood[{p.up(i), p.down(i)}].push_back(i);
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (auto& [nb, members] : by_neighbourhood) {
    for (int x : members) class_of[x] = static_cast<int>(classes.size());
    classes.push_back(members);
  }
  const int k = static_cast<int>(classes.size());
  Quotient q{std::vector<Mask>(static_cast<std::size_t>(k), 0), std::vector<Mask>(static_cast<std::size_t>(k), 0)};
  for (int c = 0; c < k; ++c) {
    const int rep = classes[c].front();
    for_each_bit(p.up(rep), [&](int j) {
      q.up[c] |= bit(class_of[j]);
      q.down[class_of[j]] |= bit(c);
    });
  }

  // Initial colours: class size, then the element's up/down degrees in P.
  std::vector<std::tuple<int, int, int>> invariant(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    const int rep = classes[c].front();
    invariant[c] = {static_cast<int>(classes[c].size()), popcount(p.up(rep)), popcount(p.down(rep))};
  }
  auto ordered = invariant;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  std::vector<int> col(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    col[c] = static_cast<int>(std::lower_bound(ordered.begin(), ordered.end(), invariant[c]) - ordered.begin());
  }

  CanonicalForm result;
  result.labelling.assign(static_cast<std::size_t>(n), 0);
  if (k > 0) {
    Search search{q, {}, {}, 0};
    search.explore(col);
    std::vector<int> class_at_label(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) class_at_label[search.best_labels[c]] = c;
    int next = 0;
    for (int label = 0; label < k; ++label) {
      for (int x : classes[class_at_label[label]]) result.labelling[x] = next++;
    }
    result.automorphisms = search.leaves_at_best;
    for (const auto& members : classes) result.automorphisms *= factorial(static_cast<int>(members.size()));
  } else {
    result.automorphisms = 1;
  }
  result.poset = relabel(p, result.labelling);
  result.key = encode_key(result.poset);
  return result;
}

std::string canonical_key(const Poset& p) { return canonical_form(p).key; }

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.relation_count() != b.relation_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

Integer automorphism_count(const Poset& p) { return canonical_form(p).automorphisms; }

}  // namespace posetsym
