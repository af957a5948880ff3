#pragma once

#include <array>
#include <string>
#include <vector>

#include "altruns/polynomial.hpp"
#include "altruns/ratfun.hpp"

namespace altruns {

// Multiplicity pattern 1, 1, 2, 2, 3, 3, ...
inline constexpr int epsilon(int i) { return i / 2 + 1; }

// ceil(s (s + 2) / 4)
inline constexpr int delta_degree(int s) { return (s * (s + 2) + 3) / 4; }

// Degree of the numerator of u_s by the two-step recurrence
// d(s) = max(d(s-1) + floor((s+1)/2), d(s-2) + s), d(2) = 3, d(3) = 5
// (d(1) = 2 from u_1).
int numerator_degree_recurrence(int s);

// prod_{i=0}^{s-1} (1 - (s-i) x)^{epsilon(i)}; requires s >= 1.
FactoredDenominator delta(int s);

// Exact division of expanded denominators. Throws InternalError on a nonzero
// remainder.
Polynomial polynomial_ratio(const FactoredDenominator& num, const FactoredDenominator& den);

inline constexpr int kDefaultSMax = 12;

// u_s(x) = sum_n P(n, s) x^n over the denominator delta(s).
struct UsFunction {
  int s = 0;
  RationalFunction ratfun;
  // Degrees of the four numerator contributions (first-order term,
  // derivative term, log-derivative term, linear term); -1 when a term
  // vanishes.
  std::array<int, 4> term_degrees{-1, -1, -1, -1};
};

// u_1 .. u_{s_max}: element [s-1] is u_s. Throws InternalError("Theorem 1
// form violated") if clearing denominators leaves a remainder.
std::vector<UsFunction> build_us(int s_max);
UsFunction build_u(int s);

struct DegreeAudit {
  int s = 0;
  int numerator_degree = 0;
  int expected_numerator_degree = 0;
  int recurrence_degree = 0;
  int denominator_degree = 0;
  int expected_denominator_degree = 0;
  int numerator_valuation = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

DegreeAudit degree_audit(const UsFunction& u);

struct RatioIdentityReport {
  int s = 0;
  Polynomial consecutive_ratio;  // delta(s) / ((1 - s x) delta(s-1))
  Polynomial skip_ratio;         // delta(s) / ((1 - s x) delta(s-2))
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks both ratio identities as exact polynomial equalities; s >= 2.
RatioIdentityReport ratio_identities_check(int s);

// f = content * x^power * cofactor / denominator with cofactor a primitive
// integer polynomial whose constant term is positive.
struct CanonicalGf {
  Rational content;
  int x_power = 0;
  Polynomial cofactor;
  FactoredDenominator denominator;
};

CanonicalGf canonical_form(const RationalFunction& f);

// e.g. "2x^4(5-6x) / ((1-3x)(1-2x)(1-x)^2)"
std::string render_gf(const RationalFunction& f);

// e.g. "(1-3x)(1-2x)(1-x)^2"
std::string render_denominator(const FactoredDenominator& d);

}  // namespace altruns
