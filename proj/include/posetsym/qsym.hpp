#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "posetsym/arith.hpp"
#include "posetsym/comb.hpp"
#include "posetsym/polynomial.hpp"

namespace posetsym {

enum class QBasis { M, F };

// Homogeneous quasisymmetric function of one degree in the monomial (M) or
// fundamental (F) basis. Terms are keyed by the subset mask of [n-1]
// (composition alpha <-> set(alpha)); zero coefficients are never stored.
class QsymElement {
 public:
  using Terms = std::map<std::uint32_t, Rational>;

  QsymElement() = default;
  QsymElement(int degree, QBasis basis);
  static QsymElement one();
  static QsymElement monomial(const Composition& alpha, const Rational& c = 1);
  static QsymElement fundamental(const IndexSet& set, const Rational& c = 1);

  int degree() const { return degree_; }
  QBasis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Composition& alpha) const;
  Rational coefficient_of_set(std::uint32_t mask) const;
  void add(const Composition& alpha, const Rational& c);
  void add_set(std::uint32_t mask, const Rational& c);

  QsymElement& operator+=(const QsymElement& o);
  QsymElement& operator-=(const QsymElement& o);
  QsymElement& operator*=(const Rational& c);
  friend QsymElement operator+(QsymElement a, const QsymElement& b) { return a += b; }
  friend QsymElement operator-(QsymElement a, const QsymElement& b) { return a -= b; }
  bool operator==(const QsymElement&) const = default;

 private:
  void check_compatible(const QsymElement& o) const;
  int degree_ = 0;
  QBasis basis_ = QBasis::M;
  Terms terms_;
};

QsymElement m_to_f(const QsymElement& x);
QsymElement f_to_m(const QsymElement& x);
QsymElement to_basis(const QsymElement& x, QBasis basis);

// Quasi-shuffle product; the result is in the M basis.
QsymElement qsym_product(const QsymElement& x, const QsymElement& y);
QsymElement qsym_power(const QsymElement& x, int k);
// S(F_I) = (-1)^n F_{complement of I^op}; the result is in the F basis.
QsymElement qsym_antipode(const QsymElement& x);

// ps^1(x)(m) = sum over alpha of [M_alpha] x * binomial(m, l(alpha)).
Polynomial principal_specialization(const QsymElement& x);
// (ps^1(x)(-m), ps^1(S(x))(m)); equal by reciprocity.
std::pair<Rational, Rational> reciprocity_check(const QsymElement& x, const Rational& m);

// Linear map with F_I -> t (t-1)^i when I = {i+1, ..., n-1}, 0 otherwise.
// F_{} is the case i = n-1.
Polynomial phi_detector(const QsymElement& x);

std::string basis_name(QBasis b);
nlohmann::json to_json(const QsymElement& x);
QsymElement qsym_from_json(const nlohmann::json& j);

}  // namespace posetsym
