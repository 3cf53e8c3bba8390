#include "posetsym/sym.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "posetsym/config.hpp"
#include "posetsym/error.hpp"

namespace posetsym {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

constexpr std::array<SymBasis, 5> kAllBases = {SymBasis::m, SymBasis::p, SymBasis::e, SymBasis::h, SymBasis::s};

int basis_index(SymBasis b) { return static_cast<int>(b); }

Matrix identity(std::size_t n) {
  Matrix id(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Gauss-Jordan over the rationals.
Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("transition matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& a) {
  std::vector<Rational> out(a.empty() ? 0 : a.front().size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (a[i][k] != 0) out[k] += v[i] * a[i][k];
    }
  }
  return out;
}

// Per-degree transition data. Row lambda of to_m[b] is the m-expansion of
// b_lambda; from_m[b] is its inverse.
struct Transition {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  std::array<Matrix, 5> to_m;
  std::array<Matrix, 5> from_m;

  std::vector<Rational> dense(const SymElement& x) const {
    std::vector<Rational> v(parts.size(), Rational(0));
    for (const auto& [lambda, c] : x.terms()) v[index.at(lambda)] = c;
    return v;
  }
  SymElement sparse(const std::vector<Rational>& v, int degree, SymBasis basis) const {
    SymElement out(degree, basis);
    for (std::size_t i = 0; i < v.size(); ++i) out.add(parts[i], v[i]);
    return out;
  }
};

std::vector<Rational> m_row(const Transition& t, const QsymElement& monomial_expansion) {
  const SymElement sym = detect_symmetric(monomial_expansion);
  return t.dense(sym);
}

QsymElement product_of_monomials(const Partition& lambda, bool elementary) {
  QsymElement out = QsymElement::one();
  for (int part : lambda.parts()) {
    const Composition factor = elementary ? Composition(std::vector<int>(static_cast<std::size_t>(part), 1))
                                          : Composition{part};
    out = qsym_product(out, QsymElement::monomial(factor));
  }
  return out;
}

std::unique_ptr<Transition> build_transition(int degree) {
  auto t = std::make_unique<Transition>();
  t->parts = partitions(degree);
  for (std::size_t i = 0; i < t->parts.size(); ++i) t->index.emplace(t->parts[i], i);
  const std::size_t n = t->parts.size();

  t->to_m[basis_index(SymBasis::m)] = identity(n);
  t->from_m[basis_index(SymBasis::m)] = identity(n);

  Matrix& p = t->to_m[basis_index(SymBasis::p)];
  Matrix& e = t->to_m[basis_index(SymBasis::e)];
  for (const Partition& lambda : t->parts) {
    p.push_back(m_row(*t, product_of_monomials(lambda, false)));
    e.push_back(m_row(*t, product_of_monomials(lambda, true)));
  }
  t->from_m[basis_index(SymBasis::p)] = inverse(p);

  // h_lambda = omega(e_lambda), applied in the p basis.
  Matrix& h = t->to_m[basis_index(SymBasis::h)];
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> in_p = row_times(e[i], t->from_m[basis_index(SymBasis::p)]);
    for (std::size_t k = 0; k < n; ++k) {
      if ((degree - t->parts[k].length()) % 2 != 0) in_p[k] = -in_p[k];
    }
    h.push_back(row_times(in_p, p));
  }

  // s_lambda = det(h_{lambda_i - i + j}), expanded over permutations with
  // every index nonnegative; h_0 = 1 and negative indices vanish.
  Matrix& s = t->to_m[basis_index(SymBasis::s)];
  for (const Partition& lambda : t->parts) {
    const int k = lambda.length();
    std::vector<Rational> row(n, Rational(0));
    std::vector<int> chosen;
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == k) {
        int inversions = 0;
        for (int a = 0; a < k; ++a) {
          for (int b = a + 1; b < k; ++b) inversions += chosen[a] > chosen[b] ? 1 : 0;
        }
        std::vector<int> indices;
        for (int r = 0; r < k; ++r) {
          const int idx = lambda[r] - r + chosen[r];
          if (idx > 0) indices.push_back(idx);
        }
        std::sort(indices.begin(), indices.end(), std::greater<>());
        const auto& hrow = h[t->index.at(Partition(indices))];
        const Rational sign = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t c = 0; c < n; ++c) row[c] += sign * hrow[c];
        return;
      }
      for (int j = 0; j < k; ++j) {
        if (used[j] || lambda[i] - i + j < 0) continue;
        used[j] = true;
        chosen.push_back(j);
        self(self, i + 1);
        chosen.pop_back();
        used[j] = false;
      }
    };
    rec(rec, 0);
    s.push_back(std::move(row));
  }

  t->from_m[basis_index(SymBasis::e)] = inverse(e);
  t->from_m[basis_index(SymBasis::h)] = inverse(h);
  t->from_m[basis_index(SymBasis::s)] = inverse(s);
  return t;
}

// Built once per degree under the lock, read-only afterwards.
const Transition& transition(int degree) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Transition>> cache;
  check_degree(degree, "symmetric function basis change");
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[degree];
  if (!slot) slot = build_transition(degree);
  return *slot;
}

}  // namespace

SymElement::SymElement(int degree, SymBasis basis) : degree_(degree), basis_(basis) {
  if (degree < 0 || degree > kMaxWeight) throw SizeError("degree outside [0, 31]");
}

SymElement SymElement::basis_element(SymBasis basis, const Partition& lambda, const Rational& c) {
  SymElement x(lambda.weight(), basis);
  x.add(lambda, c);
  return x;
}

Rational SymElement::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymElement::add(const Partition& lambda, const Rational& c) {
  if (lambda.weight() != degree_) throw WeightError("partition weight differs from the element degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& o) {
  if (o.degree_ != degree_) throw DegreeError("adding elements of different degrees");
  const SymElement rhs = o.basis_ == basis_ ? o : change_basis(o, basis_);
  for (const auto& [lambda, c] : rhs.terms_) add(lambda, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
  if (o.degree_ != degree_) throw DegreeError("subtracting elements of different degrees");
  const SymElement rhs = o.basis_ == basis_ ? o : change_basis(o, basis_);
  for (const auto& [lambda, c] : rhs.terms_) add(lambda, -c);
  return *this;
}

SymElement& SymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, v] : terms_) v *= c;
  return *this;
}

SymElement detect_symmetric(const QsymElement& x) {
  const QsymElement m = to_basis(x, QBasis::M);
  SymElement out(m.degree(), SymBasis::m);
  std::map<Partition, bool> checked;
  for (const auto& [mask, c] : m.terms()) {
    const Composition alpha = comp_of_mask(m.degree(), mask);
    const Partition lambda = sort_to_partition(alpha);
    if (checked.count(lambda) != 0) continue;
    checked.emplace(lambda, true);
    std::vector<int> arrangement = lambda.parts();
    std::sort(arrangement.begin(), arrangement.end());
    do {
      const Composition beta(arrangement);
      if (m.coefficient(beta) != c) throw NotSymmetric(alpha.parts(), beta.parts());
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out.add(lambda, c);
  }
  return out;
}

std::optional<SymElement> try_detect_symmetric(const QsymElement& x) {
  try {
    return detect_symmetric(x);
  } catch (const NotSymmetric&) {
    return std::nullopt;
  }
}

QsymElement to_qsym(const SymElement& x) {
  const SymElement m = change_basis(x, SymBasis::m);
  QsymElement out(m.degree(), QBasis::M);
  for (const auto& [lambda, c] : m.terms()) {
    std::vector<int> arrangement = lambda.parts();
    std::sort(arrangement.begin(), arrangement.end());
    do {
      out.add(Composition(arrangement), c);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return out;
}

SymElement expand_in_monomials(SymBasis b, const Partition& lambda) {
  const Transition& t = transition(lambda.weight());
  const auto& row = t.to_m[basis_index(b)][t.index.at(lambda)];
  return t.sparse(row, lambda.weight(), SymBasis::m);
}

SymElement change_basis(const SymElement& x, SymBasis target) {
  if (x.basis() == target) return x;
  const Transition& t = transition(x.degree());
  const std::vector<Rational> in_m = row_times(t.dense(x), t.to_m[basis_index(x.basis())]);
  return t.sparse(row_times(in_m, t.from_m[basis_index(target)]), x.degree(), target);
}

SymElement omega_involution(const SymElement& x) {
  SymElement in_p = change_basis(x, SymBasis::p);
  SymElement flipped(x.degree(), SymBasis::p);
  for (const auto& [lambda, c] : in_p.terms()) {
    flipped.add(lambda, (lambda.weight() - lambda.length()) % 2 == 0 ? c : Rational(-c));
  }
  return change_basis(flipped, x.basis());
}

Rational scalar_product(const SymElement& x, const SymElement& y) {
  if (x.degree() != y.degree()) throw DegreeError("scalar product of elements of different degrees");
  if (x.is_zero() || y.is_zero()) return 0;
  const SymElement a = change_basis(x, SymBasis::m);
  const SymElement b = change_basis(y, SymBasis::h);
  Rational total = 0;
  for (const auto& [lambda, c] : a.terms()) total += c * b.coefficient(lambda);
  return total;
}

std::string basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::p: return "p";
    case SymBasis::e: return "e";
    case SymBasis::h: return "h";
    case SymBasis::s: return "s";
  }
  return "?";
}

std::optional<SymBasis> parse_sym_basis(const std::string& name) {
  for (SymBasis b : kAllBases) {
    if (basis_name(b) == name) return b;
  }
  return std::nullopt;
}

nlohmann::json to_json(const SymElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : x.terms()) {
    terms.push_back({{"index", lambda.parts()}, {"coeff", to_string(c)}});
  }
  return {{"degree", x.degree()}, {"basis", basis_name(x.basis())}, {"terms", terms}};
}

SymElement sym_from_json(const nlohmann::json& j) {
  try {
    const auto basis = parse_sym_basis(j.at("basis").get<std::string>());
    if (!basis) throw ParseError("not a symmetric basis: " + j.at("basis").get<std::string>());
    SymElement x(j.at("degree").get<int>(), *basis);
    for (const auto& t : j.at("terms")) {
      x.add(Partition(t.at("index").get<std::vector<int>>()), parse_rational(t.at("coeff").get<std::string>()));
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  }
}

}  // namespace posetsym
