#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "posetsym/arith.hpp"
#include "posetsym/comb.hpp"
#include "posetsym/qsym.hpp"

namespace posetsym {

enum class SymBasis { m, p, e, h, s };

// Homogeneous symmetric function in one of the classical bases, with exact
// rational coefficients keyed by partitions of the degree.
class SymElement {
 public:
  using Terms = std::map<Partition, Rational>;

  SymElement() = default;
  SymElement(int degree, SymBasis basis);
  static SymElement basis_element(SymBasis basis, const Partition& lambda, const Rational& c = 1);

  int degree() const { return degree_; }
  SymBasis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const Rational& c);

  SymElement& operator+=(const SymElement& o);
  SymElement& operator-=(const SymElement& o);
  SymElement& operator*=(const Rational& c);
  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  bool operator==(const SymElement&) const = default;

 private:
  int degree_ = 0;
  SymBasis basis_ = SymBasis::m;
  Terms terms_;
};

// Reads the m-expansion off an M-expansion. Throws NotSymmetric with two
// rearrangements of one partition that carry different coefficients.
SymElement detect_symmetric(const QsymElement& x);
std::optional<SymElement> try_detect_symmetric(const QsymElement& x);
// m_lambda -> sum of M_alpha over rearrangements alpha of lambda.
QsymElement to_qsym(const SymElement& x);

// m-expansion of p_lambda, e_lambda, h_lambda or s_lambda. p and e are
// expanded as products of M_(k) and M_(1,...,1); h as omega of e through the
// p basis; s by the Jacobi-Trudi determinant over h.
SymElement expand_in_monomials(SymBasis b, const Partition& lambda);

SymElement change_basis(const SymElement& x, SymBasis target);
// omega(p_lambda) = (-1)^{|lambda| - l(lambda)} p_lambda; result in x's basis.
SymElement omega_involution(const SymElement& x);
// Bilinear form with <m_lambda, h_mu> = delta. Throws DegreeError.
Rational scalar_product(const SymElement& x, const SymElement& y);

std::string basis_name(SymBasis b);
std::optional<SymBasis> parse_sym_basis(const std::string& name);
nlohmann::json to_json(const SymElement& x);
SymElement sym_from_json(const nlohmann::json& j);

}  // namespace posetsym
