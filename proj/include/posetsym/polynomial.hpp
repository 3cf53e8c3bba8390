#pragma once

#include <string>
#include <vector>

#include "posetsym/arith.hpp"

namespace posetsym {

// Univariate polynomial with exact rational coefficients; coefficient i
// multiplies x^i. Trailing zeros are always trimmed, so the zero polynomial
// has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = 1);
  // x (x - 1) ... (x - k + 1) / k!
  static Polynomial binomial(int k);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int i) const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

  // Human-readable form in the given variable, highest degree first.
  std::string to_string(const std::string& variable = "m") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace posetsym
