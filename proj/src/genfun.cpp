#include "altruns/genfun.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "altruns/errors.hpp"

namespace altruns {

int numerator_degree_recurrence(int s) {
  if (s < 1) throw DomainError("degree recurrence requires s >= 1");
  if (s == 1) return 2;
  if (s == 2) return 3;
  if (s == 3) return 5;
  int d2 = 3, d1 = 5;  // d(s-2), d(s-1)
  for (int t = 4; t <= s; ++t) {
    const int d = std::max(d1 + (t + 1) / 2, d2 + t);
    d2 = d1;
    d1 = d;
  }
  return d1;
}

FactoredDenominator delta(int s) {
  if (s < 1) throw DomainError("delta requires s >= 1");
  FactoredDenominator::FactorMap f;
  for (int i = 0; i <= s - 1; ++i) f[s - i] = epsilon(i);
  FactoredDenominator d(std::move(f));
  if (d.degree() != delta_degree(s))
    throw InternalError("delta degree differs from ceil(s(s+2)/4)");
  return d;
}

Polynomial polynomial_ratio(const FactoredDenominator& num, const FactoredDenominator& den) {
  DivRem dr = divrem(num.expand(), den.expand());
  if (!dr.remainder.is_zero()) throw InternalError("Theorem 1 form violated");
  return std::move(dr.quotient);
}

namespace {

FactoredDenominator delta_or_one(int s) { return s <= 0 ? FactoredDenominator() : delta(s); }

const Polynomial& x_poly() {
  static const Polynomial x = Polynomial::from_integers({0, 1});
  return x;
}

// Numerator of u_s over delta(s) from the numerators of u_{s-1}, u_{s-2}.
UsFunction step(int s, const Polynomial& phi1, const Polynomial& phi2) {
  const FactoredDenominator ds = delta(s);
  const FactoredDenominator d1 = delta_or_one(s - 1).times(s);
  const FactoredDenominator d2 = delta_or_one(s - 2).times(s);

  const Polynomial& x = x_poly();
  const Polynomial x2 = x * x;
  const Polynomial r1 = polynomial_ratio(ds, d1);
  const Polynomial r2 = polynomial_ratio(ds, d2);

  UsFunction u;
  u.s = s;
  const Polynomial t1 = x * phi1 * r1 * Rational(2);
  const Polynomial t2 = x2 * phi2.derivative() * r2;
  // -Delta'/Delta = sum_k e_k k / (1 - k x) over the factors of delta(s-2).
  Polynomial t3;
  const FactoredDenominator inner = delta_or_one(s - 2);
  for (const auto& [k, e] : inner.factors())
    t3 += polynomial_ratio(ds, d2.times(k)) * Rational(e * k);
  t3 = x2 * phi2 * t3;
  const Polynomial t4 = x * phi2 * r2 * Rational(-(s - 1));

  u.term_degrees = {t1.degree(), t2.degree(), t3.degree(), t4.degree()};
  u.ratfun = RationalFunction(t1 + t2 + t3 + t4, ds);
  return u;
}

}  // namespace

std::vector<UsFunction> build_us(int s_max) {
  if (s_max < 1) throw DomainError("build_us requires s_max >= 1");
  std::vector<UsFunction> out;
  out.reserve(s_max);

  UsFunction u1;
  u1.s = 1;
  const Polynomial phi1 = Polynomial::from_integers({0, 0, 2});
  u1.ratfun = RationalFunction(phi1, delta(1));
  u1.term_degrees = {phi1.degree(), -1, -1, -1};
  out.push_back(std::move(u1));

  Polynomial prev2;  // u_0 = 0
  for (int s = 2; s <= s_max; ++s) {
    const Polynomial prev1 = out.back().ratfun.numerator();
    out.push_back(step(s, prev1, prev2));
    prev2 = prev1;
  }
  return out;
}

UsFunction build_u(int s) { return build_us(s).back(); }

DegreeAudit degree_audit(const UsFunction& u) {
  DegreeAudit a;
  a.s = u.s;
  a.numerator_degree = u.ratfun.numerator().degree();
  a.expected_numerator_degree = 1 + delta_degree(u.s);
  a.recurrence_degree = numerator_degree_recurrence(u.s);
  a.denominator_degree = u.ratfun.denominator().degree();
  a.expected_denominator_degree = delta_degree(u.s);
  a.numerator_valuation = u.ratfun.numerator().valuation();

  const auto s = std::to_string(u.s);
  if (a.numerator_degree != a.expected_numerator_degree)
    a.failures.push_back("deg Phi_" + s + " = " + std::to_string(a.numerator_degree) +
                         ", expected 1 + ceil(s(s+2)/4) = " +
                         std::to_string(a.expected_numerator_degree));
  if (a.recurrence_degree != a.expected_numerator_degree)
    a.failures.push_back("degree recurrence d(" + s + ") = " +
                         std::to_string(a.recurrence_degree) + " disagrees with closed form");
  if (a.denominator_degree != a.expected_denominator_degree)
    a.failures.push_back("denominator degree " + std::to_string(a.denominator_degree) +
                         ", expected ceil(s(s+2)/4) = " +
                         std::to_string(a.expected_denominator_degree));
  if (a.numerator_degree != a.denominator_degree + 1)
    a.failures.push_back("numerator degree is not denominator degree + 1");
  if (a.numerator_valuation != u.s + 1)
    a.failures.push_back("lowest numerator term at x^" + std::to_string(a.numerator_valuation) +
                         ", expected x^" + std::to_string(u.s + 1));
  if (u.ratfun.denominator() != delta(u.s))
    a.failures.push_back("denominator is not delta(" + s + ")");
  return a;
}

RatioIdentityReport ratio_identities_check(int s) {
  if (s < 2) throw DomainError("ratio identities require s >= 2");
  RatioIdentityReport r;
  r.s = s;
  const FactoredDenominator ds = delta(s);
  r.consecutive_ratio = polynomial_ratio(ds, delta(s - 1).times(s));
  r.skip_ratio = polynomial_ratio(ds, delta_or_one(s - 2).times(s));

  Polynomial even_product = Polynomial::constant(1);
  for (int j = 2; j <= s - 1; j += 2) even_product *= Polynomial::linear_factor(s - j);
  Polynomial full_product = Polynomial::constant(1);
  for (int j = 1; j <= s - 1; ++j) full_product *= Polynomial::linear_factor(s - j);

  if (r.consecutive_ratio != even_product)
    r.failures.push_back("delta(s)/((1-sx)delta(s-1)) != prod over even j");
  if (r.consecutive_ratio.degree() != (s - 1) / 2)
    r.failures.push_back("consecutive ratio degree != floor((s-1)/2)");
  if (r.skip_ratio != full_product)
    r.failures.push_back("delta(s)/((1-sx)delta(s-2)) != prod_{j=1}^{s-1}(1-(s-j)x)");
  if (r.skip_ratio.degree() != s - 1) r.failures.push_back("skip ratio degree != s-1");
  return r;
}

CanonicalGf canonical_form(const RationalFunction& f) {
  CanonicalGf c;
  c.denominator = f.denominator();
  const Polynomial& num = f.numerator();
  if (num.is_zero()) {
    c.content = 0;
    return c;
  }
  c.x_power = num.valuation();
  BigInt g = 0, l = 1;
  for (const auto& q : num.coefficients()) {
    if (q == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  c.content = make_rational(g, l);
  if (num.coefficient(static_cast<std::size_t>(c.x_power)) < 0) c.content = -c.content;
  std::vector<Rational> cof(num.coefficients().begin() + c.x_power, num.coefficients().end());
  for (auto& q : cof) q /= c.content;
  c.cofactor = Polynomial(std::move(cof));
  return c;
}

namespace {

// Compact ascending rendering without spaces, e.g. "8-29x+24x^2".
std::string compact(const Polynomial& p) {
  std::string s = to_string(p);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

std::string render_denominator(const FactoredDenominator& d) {
  std::string out;
  for (const auto& [k, e] : d.factors()) {
    out += "(1-" + (k == 1 ? std::string() : std::to_string(k)) + "x)";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string render_gf(const RationalFunction& f) {
  const CanonicalGf c = canonical_form(f);
  if (f.numerator().is_zero()) return "0";
  std::string num;
  const bool unit_cofactor = c.cofactor == Polynomial::constant(1);
  if (c.content == -1 && c.x_power > 0)
    num = "-";
  else if (c.content != 1 || c.x_power == 0)
    num = to_string(c.content);
  if (c.x_power > 0) num += c.x_power == 1 ? "x" : "x^" + std::to_string(c.x_power);
  if (!unit_cofactor) num += "(" + compact(c.cofactor) + ")";
  if (c.denominator.empty()) return num;
  const bool single = c.denominator.factors().size() == 1;
  const std::string den = render_denominator(c.denominator);
  return num + " / " + (single ? den : "(" + den + ")");
}

}  // namespace altruns
