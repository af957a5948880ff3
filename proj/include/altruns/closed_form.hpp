#pragma once

#include <span>
#include <string>
#include <vector>

#include "altruns/genfun.hpp"
#include "altruns/polynomial.hpp"
#include "altruns/rational.hpp"

namespace altruns {

// Coefficient of (s - i)^n in the terminating formula, as a polynomial in n.
struct PsiPolynomial {
  int i = 0;
  int s = 0;
  Polynomial in_n;

  int base() const { return s - i; }
  friend bool operator==(const PsiPolynomial&, const PsiPolynomial&) = default;
};

// P(n, s) = sum_{i=0}^{s-1} psi_i(n) (s - i)^n for n >= validity_floor.
struct ClosedFormFormula {
  int s = 0;
  std::vector<PsiPolynomial> psi;  // psi[i], i = 0..s-1
  int validity_floor = 2;

  // Raw sum, no domain checks.
  Rational value_at(long n) const;
};

// K(s) = 2^{-(s-2)}
Rational k_constant(int s);

// C(n + m - 1, m - 1) as a polynomial in n.
Polynomial binomial_in_n(int m);

ClosedFormFormula formula_from_pfd(const UsFunction& u);
ClosedFormFormula formula_from_pfd(int s);

// Solves (s-i) psi_i(n,s) = s psi_i(n-1,s) + 2 psi_{i-1}(n-1,s-1)
//                            + (n-s) psi_{i-2}(n-1,s-2)
// for psi_0..psi_{i_max}, starting from psi_0 = K(s), psi_{-1} = 0, with an
// ansatz of degree floor(i/2) in n.
std::vector<PsiPolynomial> psi_from_recurrence(int s, int i_max);

// Exact integer P(n, s). Requires n >= validity_floor and s <= n - 1; throws
// InternalError("formula/floor mismatch") if the sum is not integral.
BigInt evaluate_closed_form(const ClosedFormFormula& f, long n);

struct AsymptoticEstimate {
  int n = 0;
  int s = 0;
  BigInt exact;
  Rational estimate;        // s^n / 2^{s-2}
  Rational relative_error;  // exact / estimate - 1
};

// Requires s >= 1 and every n >= s + 1 (so that P(n, s) > 0).
std::vector<AsymptoticEstimate> asymptotic_report(int s, std::span<const int> n_list);

// e.g. "4^(n-1) - 3^n + (6-n)*2^(n-1) + (2n-7)"
std::string render_formula_rhs(const ClosedFormFormula& f);
// e.g. "P(n,4) = ...  [n >= 2]"
std::string render_formula(const ClosedFormFormula& f);

}  // namespace altruns
