#include "posetsym/qsym.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "posetsym/error.hpp"
#include "posetsym/kernels.hpp"

namespace posetsym {

namespace {

constexpr int kMaxDenseBits = 20;

int index_bits(int n) { return n <= 1 ? 0 : n - 1; }

enum class Transform { Zeta, Mobius };

// Dense subset transform over [n-1]. Integer input whose absolute sum fits
// in 64 bits goes through the dispatched SIMD kernel; anything else takes
// the exact rational path.
QsymElement::Terms transform_terms(const QsymElement::Terms& terms, int n, Transform which) {
  const int bits = index_bits(n);
  if (bits > kMaxDenseBits) throw SizeError("dense basis change limited to degree 21");
  const std::size_t size = std::size_t{1} << bits;

  bool small_integers = true;
  for (const auto& [mask, c] : terms) {
    if (!is_integral(c)) {
      small_integers = false;
      break;
    }
    const Integer num = boost::multiprecision::numerator(c);
    if (num > std::numeric_limits<std::int64_t>::max() || num < -std::numeric_limits<std::int64_t>::max()) {
      small_integers = false;
      break;
    }
  }

  QsymElement::Terms out;
  if (small_integers) {
    std::vector<std::int64_t> dense(size, 0);
    for (const auto& [mask, c] : terms) {
      dense[mask] = boost::multiprecision::numerator(c).convert_to<std::int64_t>();
    }
    if (kernels::fits_transform_bound(dense)) {
      if (which == Transform::Zeta) {
        kernels::subset_zeta(dense);
      } else {
        kernels::subset_mobius(dense);
      }
      for (std::size_t s = 0; s < size; ++s) {
        if (dense[s] != 0) out.emplace(static_cast<std::uint32_t>(s), Rational(dense[s]));
      }
      return out;
    }
  }

  std::vector<Rational> dense(size, Rational(0));
  for (const auto& [mask, c] : terms) dense[mask] = c;
  if (which == Transform::Zeta) {
    kernels::subset_zeta_generic(dense);
  } else {
    kernels::subset_mobius_generic(dense);
  }
  for (std::size_t s = 0; s < size; ++s) {
    if (dense[s] != 0) out.emplace(static_cast<std::uint32_t>(s), dense[s]);
  }
  return out;
}

void quasi_shuffle(const std::vector<int>& a, const std::vector<int>& b, std::size_t i, std::size_t j,
                   std::vector<int>& word, const Rational& c, QsymElement& out) {
  if (i == a.size() && j == b.size()) {
    out.add(Composition(word), c);
    return;
  }
  if (i < a.size()) {
    word.push_back(a[i]);
    quasi_shuffle(a, b, i + 1, j, word, c, out);
    word.pop_back();
  }
  if (j < b.size()) {
    word.push_back(b[j]);
    quasi_shuffle(a, b, i, j + 1, word, c, out);
    word.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    word.push_back(a[i] + b[j]);
    quasi_shuffle(a, b, i + 1, j + 1, word, c, out);
    word.pop_back();
  }
}

}  // namespace

QsymElement::QsymElement(int degree, QBasis basis) : degree_(degree), basis_(basis) {
  if (degree < 0 || degree > kMaxWeight) throw SizeError("degree outside [0, 31]");
}

QsymElement QsymElement::one() {
  QsymElement x(0, QBasis::M);
  x.add_set(0, 1);
  return x;
}

QsymElement QsymElement::monomial(const Composition& alpha, const Rational& c) {
  QsymElement x(alpha.weight(), QBasis::M);
  x.add(alpha, c);
  return x;
}

QsymElement QsymElement::fundamental(const IndexSet& set, const Rational& c) {
  QsymElement x(set.n, QBasis::F);
  x.add_set(set.members, c);
  return x;
}

Rational QsymElement::coefficient(const Composition& alpha) const {
  if (alpha.weight() != degree_) return 0;
  return coefficient_of_set(set_of(alpha).members);
}

Rational QsymElement::coefficient_of_set(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QsymElement::add(const Composition& alpha, const Rational& c) {
  if (alpha.weight() != degree_) {
    throw WeightError("composition of weight " + std::to_string(alpha.weight()) + " added to a degree " +
                      std::to_string(degree_) + " element");
  }
  add_set(set_of(alpha).members, c);
}

void QsymElement::add_set(std::uint32_t mask, const Rational& c) {
  if ((mask & ~full_index_mask(degree_)) != 0) throw IndexError("index set outside [n-1]");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QsymElement::check_compatible(const QsymElement& o) const {
  if (o.degree_ != degree_) throw DegreeError("adding elements of different degrees");
  if (o.basis_ != basis_) throw std::invalid_argument("adding elements in different bases");
}

QsymElement& QsymElement::operator+=(const QsymElement& o) {
  check_compatible(o);
  for (const auto& [mask, c] : o.terms_) add_set(mask, c);
  return *this;
}

QsymElement& QsymElement::operator-=(const QsymElement& o) {
  check_compatible(o);
  for (const auto& [mask, c] : o.terms_) add_set(mask, -c);
  return *this;
}

QsymElement& QsymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, v] : terms_) v *= c;
  return *this;
}

QsymElement m_to_f(const QsymElement& x) {
  if (x.basis() != QBasis::M) throw std::invalid_argument("m_to_f expects the M basis");
  // M = sum of F with Moebius signs: [F_I] x = sum over J subset of I of
  // (-1)^{|I|-|J|} [M_J] x.
  QsymElement out(x.degree(), QBasis::F);
  for (const auto& [mask, c] : transform_terms(x.terms(), x.degree(), Transform::Mobius)) out.add_set(mask, c);
  return out;
}

QsymElement f_to_m(const QsymElement& x) {
  if (x.basis() != QBasis::F) throw std::invalid_argument("f_to_m expects the F basis");
  // F_I = sum over J containing I of M_J, so [M_J] x = sum over I subset of J of [F_I] x.
  QsymElement out(x.degree(), QBasis::M);
  for (const auto& [mask, c] : transform_terms(x.terms(), x.degree(), Transform::Zeta)) out.add_set(mask, c);
  return out;
}

QsymElement to_basis(const QsymElement& x, QBasis basis) {
  if (x.basis() == basis) return x;
  return basis == QBasis::F ? m_to_f(x) : f_to_m(x);
}

QsymElement qsym_product(const QsymElement& x, const QsymElement& y) {
  const QsymElement a = to_basis(x, QBasis::M);
  const QsymElement b = to_basis(y, QBasis::M);
  QsymElement out(a.degree() + b.degree(), QBasis::M);
  std::vector<int> word;
  for (const auto& [ma, ca] : a.terms()) {
    const Composition alpha = comp_of_mask(a.degree(), ma);
    for (const auto& [mb, cb] : b.terms()) {
      const Composition beta = comp_of_mask(b.degree(), mb);
      quasi_shuffle(alpha.parts(), beta.parts(), 0, 0, word, ca * cb, out);
    }
  }
  return out;
}

QsymElement qsym_power(const QsymElement& x, int k) {
  QsymElement out = QsymElement::one();
  for (int i = 0; i < k; ++i) out = qsym_product(out, x);
  return out;
}

QsymElement qsym_antipode(const QsymElement& x) {
  const QsymElement f = to_basis(x, QBasis::F);
  const int n = f.degree();
  const std::uint32_t full = full_index_mask(n);
  const Rational sign = (n % 2 == 0) ? 1 : -1;
  QsymElement out(n, QBasis::F);
  for (const auto& [mask, c] : f.terms()) out.add_set(full & ~opposite_mask(n, mask), sign * c);
  return out;
}

Polynomial principal_specialization(const QsymElement& x) {
  const QsymElement m = to_basis(x, QBasis::M);
  Polynomial out;
  for (const auto& [mask, c] : m.terms()) {
    const int length = m.degree() == 0 ? 0 : popcount(mask) + 1;
    out += Polynomial::binomial(length) * c;
  }
  return out;
}

std::pair<Rational, Rational> reciprocity_check(const QsymElement& x, const Rational& m) {
  return {principal_specialization(x)(-m), principal_specialization(qsym_antipode(x))(m)};
}

Polynomial phi_detector(const QsymElement& x) {
  const QsymElement f = to_basis(x, QBasis::F);
  const int n = f.degree();
  if (n == 0) return Polynomial::constant(f.coefficient_of_set(0));
  Polynomial out;
  const Polynomial t = Polynomial::monomial(1);
  const Polynomial t_minus_one({Rational(-1), Rational(1)});
  Polynomial term = t;  // t (t-1)^i
  for (int i = 0; i < n; ++i) {
    // I_i = {i+1, ..., n-1}
    const std::uint32_t mask = full_index_mask(n) & ~full_index_mask(i + 1);
    const Rational c = f.coefficient_of_set(mask);
    if (c != 0) out += term * c;
    term = term * t_minus_one;
  }
  return out;
}

std::string basis_name(QBasis b) { return b == QBasis::M ? "M" : "F"; }

nlohmann::json to_json(const QsymElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, c] : x.terms()) {
    terms.push_back({{"index", comp_of_mask(x.degree(), mask).parts()}, {"coeff", to_string(c)}});
  }
  return {{"degree", x.degree()}, {"basis", basis_name(x.basis())}, {"terms", terms}};
}

QsymElement qsym_from_json(const nlohmann::json& j) {
  try {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "M" && basis != "F") throw ParseError("not a quasisymmetric basis: " + basis);
    QsymElement x(j.at("degree").get<int>(), basis == "M" ? QBasis::M : QBasis::F);
    for (const auto& t : j.at("terms")) {
      x.add(Composition(t.at("index").get<std::vector<int>>()), parse_rational(t.at("coeff").get<std::string>()));
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  }
}

}  // namespace posetsym
