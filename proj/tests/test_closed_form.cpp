#include "doctest.h"

#include "altruns/closed_form.hpp"
#include "altruns/errors.hpp"
#include "altruns/ratfun.hpp"
#include "altruns/run_counts.hpp"

using namespace altruns;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

}  // namespace

TEST_CASE("K constant and binomials in n") {
  CHECK(k_constant(2) == 1);
  CHECK(k_constant(4) == q(1, 4));
  CHECK(k_constant(1) == 2);
  CHECK_THROWS_AS(k_constant(0), DomainError);
  CHECK(binomial_in_n(1) == Polynomial::constant(1));
  CHECK(binomial_in_n(2) == Polynomial::from_integers({1, 1}));
  for (long n = 0; n <= 10; ++n) CHECK(binomial_in_n(3)(q(n)) == Rational(binomial(n + 2, 2)));
}

TEST_CASE("u_4 partial fractions") {
  const auto pfe = partial_fractions(build_u(4).ratfun);
  const std::vector<PoleTerm> want = {{4, 1, q(1, 4)}, {3, 1, q(-1)}, {2, 2, q(-1, 2)},
                                      {2, 1, q(7, 2)}, {1, 2, q(2)},  {1, 1, q(-9)}};
  CHECK(pfe.pole_terms == want);
  CHECK(pfe.poly_part == Polynomial({q(19, 4), q(2)}));
}

TEST_CASE("rendered formulas for small s") {
  CHECK(render_formula_rhs(formula_from_pfd(1)) == "2");
  CHECK(render_formula_rhs(formula_from_pfd(2)) == "2^n - 4");
  CHECK(render_formula_rhs(formula_from_pfd(3)) == "(1/2)*3^n - 2*2^n + (1/2)*(11-2n)");
  CHECK(render_formula(formula_from_pfd(4)) ==
        "P(n,4) = 4^(n-1) - 3^n + (6-n)*2^(n-1) + (2n-7)  [n >= 2]");
  for (int s = 1; s <= 12; ++s) CHECK(formula_from_pfd(s).validity_floor == 2);
}

TEST_CASE("psi polynomials: both routes agree") {
  const auto us = build_us(10);
  for (int s = 2; s <= 10; ++s) {
    const auto pfd = formula_from_pfd(us[s - 1]);
    const auto rec = psi_from_recurrence(s, s - 1);
    REQUIRE(pfd.psi.size() == static_cast<std::size_t>(s));
    REQUIRE(rec.size() == static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
      CHECK(pfd.psi[i] == rec[i]);
      CHECK(pfd.psi[i].base() == s - i);
      CHECK(pfd.psi[i].in_n.degree() <= i / 2);
    }
    CHECK(pfd.psi[0].in_n == Polynomial::constant(k_constant(s)));
  }
}

TEST_CASE("psi low-order closed forms") {
  const auto us = build_us(12);
  for (int s = 5; s <= 12; ++s) {
    const auto f = formula_from_pfd(us[s - 1]);
    for (int i = 1; i <= 4; ++i) CHECK(f.psi[i].in_n.degree() == i / 2);
    for (long n = 0; n <= 30; ++n) {
      const Rational N(n), S(s);
      CHECK(f.psi[1].in_n(N) == -2 * k_constant(s - 1));
      CHECK(f.psi[2].in_n(N) == q(1, 4) * k_constant(s - 2) * (S + 8 - 2 * N));
      CHECK(f.psi[3].in_n(N) == q(1, 2) * k_constant(s - 3) * (2 * N - S - 3));
      CHECK(f.psi[4].in_n(N) == q(1, 32) * k_constant(s - 4) *
                                    (4 * N * N - 4 * N * (S + 8) + S * S + 15 * S + 32));
    }
  }
}

TEST_CASE("closed form evaluates to the run counts") {
  const RunTriangle t = andre_triangle(40);
  for (int s = 1; s <= 12; ++s) {
    const auto f = formula_from_pfd(s);
    for (long n = s + 1; n <= 40; ++n) CHECK(evaluate_closed_form(f, n) == t.at(static_cast<int>(n), s));
    // The raw sum is zero where no permutation has that many runs.
    for (long n = 2; n <= s; ++n) CHECK(f.value_at(n) == 0);
  }
  const auto f4 = formula_from_pfd(4);
  CHECK(evaluate_closed_form(f4, 5) == 32);
  CHECK_THROWS_AS(evaluate_closed_form(f4, 4), DomainError);
  CHECK_THROWS_AS(evaluate_closed_form(f4, 1), DomainError);
}

TEST_CASE("asymptotic relative error") {
  std::vector<int> ns;
  for (int n = 3; n <= 30; ++n) ns.push_back(n);
  const auto rep = asymptotic_report(2, ns);
  for (const auto& e : rep) {
    CHECK(e.estimate == Rational(pow(BigInt(2), e.n)));
    CHECK(e.relative_error == -make_rational(4, pow(BigInt(2), e.n)));
  }
  std::vector<int> ns4;
  for (int n = 8; n <= 60; ++n) ns4.push_back(n);
  const auto r4 = asymptotic_report(4, ns4);
  for (std::size_t i = 1; i < r4.size(); ++i)
    CHECK(abs(r4[i].relative_error) <= abs(r4[i - 1].relative_error));
  CHECK(abs(r4.back().relative_error) < q(1, 1000));
  const int bad[] = {4};
  CHECK_THROWS_AS(asymptotic_report(4, bad), DomainError);
}
