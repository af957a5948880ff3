#include "altruns/closed_form.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "altruns/errors.hpp"
#include "altruns/linear_system.hpp"
#include "altruns/run_counts.hpp"

namespace altruns {

Rational ClosedFormFormula::value_at(long n) const {
  Rational total(0);
  const Rational nq(n);
  for (const auto& p : psi) {
    if (p.in_n.is_zero()) continue;
    total += p.in_n(nq) * Rational(pow(BigInt(p.base()), static_cast<unsigned long>(n)));
  }
  return total;
}

Rational k_constant(int s) {
  if (s < 1) throw DomainError("K(s) requires s >= 1");
  return pow(Rational(2), -(s - 2));
}

Polynomial binomial_in_n(int m) {
  if (m < 1) throw DomainError("binomial_in_n requires m >= 1");
  Polynomial p = Polynomial::constant(1);
  for (int j = 1; j <= m - 1; ++j)
    p *= Polynomial({make_rational(j, j), make_rational(1, j)});  // (n + j) / j
  return p;
}

ClosedFormFormula formula_from_pfd(const UsFunction& u) {
  const int s = u.s;
  ClosedFormFormula f;
  f.s = s;
  f.psi.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) f.psi[i] = {i, s, Polynomial()};
  const PartialFractionExpansion pfe = partial_fractions(u.ratfun);
  for (const auto& t : pfe.pole_terms) {
    if (t.base < 1 || t.base > s)
      throw InternalError("pole base " + std::to_string(t.base) + " outside 1.." +
                          std::to_string(s));
    f.psi[static_cast<std::size_t>(s - t.base)].in_n += binomial_in_n(t.multiplicity) * t.coefficient;
  }
  f.validity_floor = std::max(2, pfe.poly_part.degree() + 1);
  return f;
}

ClosedFormFormula formula_from_pfd(int s) { return formula_from_pfd(build_u(s)); }

namespace {

// Coefficients psi_j(., base + j) for j = 0..i_max with fixed base.
std::vector<Polynomial> psi_chain(int base, int i_max) {
  std::vector<Polynomial> chain;
  chain.push_back(Polynomial::constant(k_constant(base)));
  const Polynomial n_poly = Polynomial::from_integers({0, 1});
  for (int j = 1; j <= i_max; ++j) {
    const int s = base + j;
    const int ansatz = j / 2;
    Polynomial rhs = chain[j - 1].shifted(-1) * Rational(2);
    if (j >= 2) {
      const Polynomial n_minus_s = n_poly - Polynomial::constant(s);
      rhs += n_minus_s * chain[j - 2].shifted(-1);
    }
    const int rows = std::max(ansatz, rhs.degree()) + 1;
    RationalMatrix a(static_cast<std::size_t>(rows),
                     std::vector<Rational>(static_cast<std::size_t>(ansatz + 1)));
    for (int c = 0; c <= ansatz; ++c) {
      // base * n^c - s * (n - 1)^c
      const Polynomial col = Polynomial::monomial(base, c) -
                             Polynomial::monomial(s, c).shifted(-1);
      for (int p = 0; p < rows; ++p) a[p][c] = col.coefficient(static_cast<std::size_t>(p));
    }
    std::vector<Rational> b(static_cast<std::size_t>(rows));
    for (int p = 0; p < rows; ++p) b[p] = rhs.coefficient(static_cast<std::size_t>(p));
    auto sol = solve_linear_system(std::move(a), std::move(b));
    if (!sol) throw InternalError("ansatz degree insufficient");
    chain.push_back(Polynomial(std::move(*sol)));
  }
  return chain;
}

}  // namespace

std::vector<PsiPolynomial> psi_from_recurrence(int s, int i_max) {
  if (s < 1) throw DomainError("psi recurrence requires s >= 1");
  if (i_max < 0 || i_max > s - 1) throw DomainError("psi recurrence requires 0 <= i_max <= s-1");
  std::vector<PsiPolynomial> out;
  out.reserve(static_cast<std::size_t>(i_max + 1));
  for (int i = 0; i <= i_max; ++i) {
    std::vector<Polynomial> chain = psi_chain(s - i, i);
    out.push_back({i, s, std::move(chain.back())});
  }
  return out;
}

BigInt evaluate_closed_form(const ClosedFormFormula& f, long n) {
  if (n < f.validity_floor)
    throw DomainError("n = " + std::to_string(n) + " below validity floor " +
                      std::to_string(f.validity_floor));
  if (f.s >= n) throw DomainError("closed form is only evaluated for s <= n-1");
  const Rational v = f.value_at(n);
  if (!is_integer(v)) throw InternalError("formula/floor mismatch");
  return v.get_num();
}

std::vector<AsymptoticEstimate> asymptotic_report(int s, std::span<const int> n_list) {
  if (s < 1) throw DomainError("asymptotic report requires s >= 1");
  if (n_list.empty()) return {};
  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  for (int n : n_list)
    if (n < s + 1) throw DomainError("asymptotic report requires n >= s+1");
  const RunTriangle tri = andre_triangle(n_max);
  const Rational scale = k_constant(s);
  std::vector<AsymptoticEstimate> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    AsymptoticEstimate e;
    e.n = n;
    e.s = s;
    e.exact = tri.at(n, s);
    e.estimate = scale * Rational(pow(BigInt(s), static_cast<unsigned long>(n)));
    e.relative_error = Rational(e.exact) / e.estimate - 1;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::string monomial_text(const Rational& mag, std::size_t i) {
  std::string t;
  if (i == 0 || mag != 1) t += to_string(mag);
  if (i >= 1) t += "n";
  if (i >= 2) t += "^" + std::to_string(i);
  return t;
}

// Descending degree, or ascending when that lets a positive term lead.
std::string render_n_poly(const Polynomial& p) {
  const auto& c = p.coefficients();
  bool any_positive = false;
  for (const auto& q : c) any_positive = any_positive || q > 0;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) order.push_back(i);
  if (!(p.leading() < 0 && any_positive)) std::reverse(order.begin(), order.end());
  std::string out;
  for (std::size_t i : order) {
    const bool negative = c[i] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    out += monomial_text(abs(c[i]), i);
  }
  return out;
}

std::size_t term_count(const Polynomial& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coefficients().begin(), p.coefficients().end(),
                    [](const Rational& q) { return q != 0; }));
}

struct RenderedTerm {
  bool negative = false;
  std::string body;
};

RenderedTerm render_term(const Polynomial& psi, long base) {
  BigInt g = 0, l = 1;
  for (const auto& q : psi.coefficients()) {
    if (q == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  Rational content = make_rational(g, l);
  Polynomial cof = psi * Rational(1 / content);
  RenderedTerm t;
  const bool all_negative = std::all_of(cof.coefficients().begin(), cof.coefficients().end(),
                                        [](const Rational& q) { return q <= 0; });
  if (all_negative) {
    t.negative = true;
    cof = -cof;
  }

  // Absorb powers of the base from the content's denominator into b^(n-t).
  long shift = 0;
  BigInt den = content.get_den();
  if (base > 1) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(base))) {
      den /= base;
      ++shift;
    }
  }
  const Rational scale = make_rational(content.get_num(), den);
  const bool unit_cof = cof == Polynomial::constant(1);

  std::string body;
  if (base == 1) {
    if (unit_cof) return {t.negative, to_string(scale)};
    if (scale != 1) body += (is_integer(scale) ? to_string(scale) : "(" + to_string(scale) + ")") + "*";
    const std::string q = render_n_poly(cof);
    body += term_count(cof) > 1 ? "(" + q + ")" : q;
    t.body = body;
    return t;
  }
  if (scale != 1) body += (is_integer(scale) ? to_string(scale) : "(" + to_string(scale) + ")") + "*";
  if (!unit_cof) {
    const std::string q = render_n_poly(cof);
    body += (term_count(cof) > 1 ? "(" + q + ")" : q) + "*";
  }
  body += std::to_string(base) + "^";
  body += shift == 0 ? "n" : "(n-" + std::to_string(shift) + ")";
  t.body = body;
  return t;
}

}  // namespace

std::string render_formula_rhs(const ClosedFormFormula& f) {
  std::string out;
  for (const auto& p : f.psi) {
    if (p.in_n.is_zero()) continue;
    const RenderedTerm t = render_term(p.in_n, p.base());
    if (out.empty())
      out = (t.negative ? "-" : "") + t.body;
    else
      out += (t.negative ? " - " : " + ") + t.body;
  }
  return out.empty() ? "0" : out;
}

std::string render_formula(const ClosedFormFormula& f) {
  return "P(n," + std::to_string(f.s) + ") = " + render_formula_rhs(f) + "  [n >= " +
         std::to_string(f.validity_floor) + "]";
}

}  // namespace altruns
