#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "altruns/rational.hpp"

namespace altruns {

// Dense univariate polynomial over the rationals. coefficients()[i] is the
// coefficient of x^i; the highest stored coefficient is never zero, and the
// zero polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial from_integers(std::initializer_list<long> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  // 1 - k x
  static Polynomial linear_factor(long k);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;
  // Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  // p(x + a)
  Polynomial shifted(const Rational& a) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division; throws DomainError("division by zero polynomial").
DivRem divrem(const Polynomial& dividend, const Polynomial& divisor);

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// Ascending-degree rendering such as "1 - 3x + 2x^2".
std::string to_string(const Polynomial& p, std::string_view var = "x");

}  // namespace altruns
