#include "altruns/ratfun.hpp"

#include <string>
#include <utility>

#include "altruns/errors.hpp"

namespace altruns {

FactoredDenominator::FactoredDenominator(FactorMap factors) : factors_(std::move(factors)) {
  for (const auto& [k, e] : factors_) {
    if (k < 1) throw DomainError("denominator factor base must be >= 1");
    if (e < 1) throw DomainError("denominator factor multiplicity must be >= 1");
  }
}

int FactoredDenominator::multiplicity(long k) const {
  const auto it = factors_.find(k);
  return it == factors_.end() ? 0 : it->second;
}

int FactoredDenominator::degree() const {
  int d = 0;
  for (const auto& [k, e] : factors_) d += e;
  return d;
}

Polynomial FactoredDenominator::expand() const {
  Polynomial p = Polynomial::constant(1);
  for (const auto& [k, e] : factors_) {
    const Polynomial lin = Polynomial::linear_factor(k);
    for (int i = 0; i < e; ++i) p *= lin;
  }
  return p;
}

FactoredDenominator FactoredDenominator::times(long k, int e) const {
  FactorMap f = factors_;
  f[k] += e;
  return FactoredDenominator(std::move(f));
}

FactoredDenominator FactoredDenominator::without(long k) const {
  FactorMap f = factors_;
  f.erase(k);
  return FactoredDenominator(std::move(f));
}

FactoredDenominator operator*(const FactoredDenominator& a, const FactoredDenominator& b) {
  FactoredDenominator::FactorMap f = a.factors_;
  for (const auto& [k, e] : b.factors_) f[k] += e;
  return FactoredDenominator(std::move(f));
}

RationalFunction::RationalFunction(Polynomial numerator, FactoredDenominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.is_zero()) {
    if (!den_.empty()) throw DomainError("zero rational function must have denominator 1");
    return;
  }
  for (const auto& [k, e] : den_.factors()) {
    if (num_(make_rational(1, k)) == 0)
      throw DomainError("numerator shares the factor (1-" + std::to_string(k) +
                        "x) with the denominator");
  }
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n_max) {
  const Polynomial d = f.denominator().expand();  // d(0) == 1
  const auto& dc = d.coefficients();
  std::vector<Rational> a(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational v = f.numerator().coefficient(n);
    const std::size_t jmax = std::min(n, dc.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) v -= dc[j] * a[n - j];
    a[n] = v;
  }
  return a;
}

PartialFractionExpansion partial_fractions(const RationalFunction& f) {
  PartialFractionExpansion out;
  Polynomial num = f.numerator();
  FactoredDenominator rest = f.denominator();
  for (const auto& [k, e] : f.denominator().factors()) {
    rest = rest.without(k);
    const Polynomial others = rest.expand();
    const Rational pole = make_rational(1, k);
    const Rational others_at_pole = others(pole);
    const Polynomial lin = Polynomial::linear_factor(k);
    // num / ((1-kx)^m * others): peel off c/(1-kx)^m, deflate by (1-kx).
    for (int m = e; m >= 1; --m) {
      const Rational c = num(pole) / others_at_pole;
      if (c != 0) out.pole_terms.push_back({k, m, c});
      DivRem dr = divrem(num - others * c, lin);
      if (!dr.remainder.is_zero())
        throw InternalError("partial fraction deflation left a remainder");
      num = std::move(dr.quotient);
    }
  }
  out.poly_part = std::move(num);
  return out;
}

Polynomial reassemble_numerator(const PartialFractionExpansion& pfe,
                                const FactoredDenominator& common) {
  Polynomial total = pfe.poly_part * common.expand();
  for (const auto& t : pfe.pole_terms) {
    const int have = common.multiplicity(t.base);
    if (have < t.multiplicity)
      throw DomainError("common denominator lacks (1-" + std::to_string(t.base) + "x)^" +
                        std::to_string(t.multiplicity));
    FactoredDenominator::FactorMap f = common.factors();
    if (have == t.multiplicity)
      f.erase(t.base);
    else
      f[t.base] = have - t.multiplicity;
    total += FactoredDenominator(std::move(f)).expand() * t.coefficient;
  }
  return total;
}

Rational expansion_coefficient(const PartialFractionExpansion& pfe, std::size_t n) {
  Rational v = pfe.poly_part.coefficient(n);
  for (const auto& t : pfe.pole_terms) {
    const auto m = static_cast<unsigned long>(t.multiplicity);
    v += t.coefficient * Rational(binomial(n + m - 1, m - 1) * pow(BigInt(t.base), n));
  }
  return v;
}

}  // namespace altruns
