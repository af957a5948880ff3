#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "altruns/polynomial.hpp"
#include "altruns/rational.hpp"

namespace altruns {

// prod_k (1 - k x)^{e_k} over distinct integers k >= 1, e_k >= 1. Kept in
// factored form; iteration runs over decreasing k.
class FactoredDenominator {
 public:
  using FactorMap = std::map<long, int, std::greater<>>;

  FactoredDenominator() = default;
  explicit FactoredDenominator(FactorMap factors);

  const FactorMap& factors() const { return factors_; }
  int multiplicity(long k) const;
  int degree() const;
  bool empty() const { return factors_.empty(); }

  Polynomial expand() const;

  FactoredDenominator times(long k, int e = 1) const;
  FactoredDenominator without(long k) const;

  friend FactoredDenominator operator*(const FactoredDenominator& a,
                                       const FactoredDenominator& b);
  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;

 private:
  FactorMap factors_;
};

// numerator / denominator with the denominator in factored form. The
// constructor rejects a numerator vanishing at any pole x = 1/k.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial numerator, FactoredDenominator denominator);

  const Polynomial& numerator() const { return num_; }
  const FactoredDenominator& denominator() const { return den_; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  FactoredDenominator den_;
};

// c / (1 - k x)^m
struct PoleTerm {
  long base;
  int multiplicity;
  Rational coefficient;

  friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

struct PartialFractionExpansion {
  // Ordered by decreasing base, then decreasing multiplicity. Vanishing
  // coefficients are omitted.
  std::vector<PoleTerm> pole_terms;
  Polynomial poly_part;
};

// [x^0] f ... [x^{n_max}] f via the linear recurrence of the expanded
// denominator.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n_max);

PartialFractionExpansion partial_fractions(const RationalFunction& f);

// Numerator obtained by putting every term of the expansion over `common`.
Polynomial reassemble_numerator(const PartialFractionExpansion& pfe,
                                const FactoredDenominator& common);

// [x^n] of the expansion using c * C(n+m-1, m-1) * k^n for each pole term.
Rational expansion_coefficient(const PartialFractionExpansion& pfe, std::size_t n);

}  // namespace altruns
