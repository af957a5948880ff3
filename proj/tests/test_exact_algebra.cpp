#include <random>

#include "doctest.h"

#include "altruns/errors.hpp"
#include "altruns/linear_system.hpp"
#include "altruns/polynomial.hpp"
#include "altruns/ratfun.hpp"
#include "altruns/rational.hpp"
#include "altruns/sturm.hpp"

using namespace altruns;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

Polynomial random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), num(-9, 9), den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return Polynomial(c);
}

}  // namespace

TEST_CASE("rationals are kept canonical") {
  CHECK(to_string(q(6, -4)) == "-3/2");
  CHECK(to_string(q(8, 4)) == "2");
  CHECK(parse_rational("-10/4") == q(-5, 2));
  CHECK(parse_rational("7") == q(7));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK(is_integer(q(4, 2)));
  CHECK_FALSE(is_integer(q(1, 2)));
  CHECK_THROWS_AS(to_integer(q(1, 2)), DomainError);
  CHECK(to_integer(q(-12, 3)) == -4);
}

TEST_CASE("big integer helpers") {
  CHECK(to_string(factorial(20)) == "2432902008176640000");
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
  CHECK(pow(q(2), -3) == q(1, 8));
  CHECK(pow(q(-2, 3), 3) == q(-8, 27));
  CHECK(sign(q(-1, 7)) == -1);
  CHECK(sign(q(0)) == 0);
}

TEST_CASE("polynomial basics") {
  const Polynomial p = Polynomial::from_integers({1, -3, 2});
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "1 - 3x + 2x^2");
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial::from_integers({0, 0, 0}).is_zero());
  CHECK(p(q(1)) == 0);
  CHECK(p(q(1, 2)) == 0);
  CHECK(p.derivative() == Polynomial::from_integers({-3, 4}));
  CHECK(Polynomial::linear_factor(3) == Polynomial::from_integers({1, -3}));
  CHECK(Polynomial::from_integers({0, 0, 5, 1}).valuation() == 2);
  CHECK(p.shifted(q(1)) == Polynomial::from_integers({0, 1, 2}));
}

TEST_CASE("division with remainder") {
  const DivRem dr = divrem(Polynomial::from_integers({0, 0, 0, 4}),
                           Polynomial::from_integers({1, -3, 2}));
  CHECK(dr.quotient == Polynomial::from_integers({3, 2}));
  CHECK(dr.remainder == Polynomial::from_integers({-3, 7}));
  CHECK_THROWS_AS(divrem(Polynomial::from_integers({1}), Polynomial()), DomainError);
  const DivRem small = divrem(Polynomial::from_integers({1, 1}), Polynomial::from_integers({0, 0, 1}));
  CHECK(small.quotient.is_zero());
}

TEST_CASE("gcd is monic and divides both") {
  const Polynomial a = Polynomial::from_integers({1, -3, 2});  // (1-x)(1-2x)
  const Polynomial b = Polynomial::from_integers({1, -1}) * Polynomial::from_integers({2, 1});
  const Polynomial g = gcd(a, b);
  CHECK(g == Polynomial::from_integers({-1, 1}));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("property: ring and division identities on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, 6), b = random_poly(rng, 4), c = random_poly(rng, 3);
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).degree() == (a.is_zero() || b.is_zero() ? -1 : a.degree() + b.degree()));
    if (b.is_zero()) continue;
    const DivRem dr = divrem(a, b);
    CHECK(dr.quotient * b + dr.remainder == a);
    CHECK(dr.remainder.degree() < b.degree());
    if (!c.is_zero()) {
      const Polynomial g = gcd(a * c, b * c);
      CHECK(divrem(a * c, g).remainder.is_zero());
      CHECK(divrem(b * c, g).remainder.is_zero());
      CHECK(divrem(g, gcd(c, c)).remainder.is_zero());
    }
    const Rational x = make_rational(static_cast<long>(trial % 7) - 3, 2);
    CHECK(a.shifted(x)(q(1, 3)) == a(q(1, 3) + x));
  }
}

TEST_CASE("exact linear solve") {
  const RationalMatrix a = {{q(2), q(1)}, {q(1), q(-1)}, {q(3), q(0)}};
  const auto x = solve_linear_system(a, {q(5), q(1), q(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == q(2));
  CHECK((*x)[1] == q(1));
  CHECK_FALSE(solve_linear_system(a, {q(5), q(1), q(7)}).has_value());
  CHECK_THROWS_AS(solve_linear_system({{q(1), q(1)}}, {q(1)}), DomainError);
}

TEST_CASE("factored denominators") {
  const FactoredDenominator d({{1, 2}, {3, 1}, {2, 1}});
  CHECK(d.degree() == 4);
  CHECK(d.multiplicity(1) == 2);
  CHECK(d.multiplicity(5) == 0);
  std::vector<long> order;
  for (const auto& [k, e] : d.factors()) order.push_back(k);
  CHECK(order == std::vector<long>{3, 2, 1});
  CHECK(d.expand() == Polynomial::linear_factor(3) * Polynomial::linear_factor(2) *
                          Polynomial::linear_factor(1) * Polynomial::linear_factor(1));
  CHECK(d.without(1).degree() == 2);
  CHECK(d.times(1).multiplicity(1) == 3);
  CHECK_THROWS_AS(FactoredDenominator(FactoredDenominator::FactorMap{{0, 1}}), DomainError);
  CHECK_THROWS_AS(FactoredDenominator(FactoredDenominator::FactorMap{{2, 0}}), DomainError);
}

TEST_CASE("rational functions reject a numerator vanishing at a pole") {
  CHECK_THROWS_AS(RationalFunction(Polynomial::linear_factor(2), FactoredDenominator(FactoredDenominator::FactorMap{{2, 1}})),
                  DomainError);
  CHECK_NOTHROW(RationalFunction(Polynomial::from_integers({0, 1}), FactoredDenominator(FactoredDenominator::FactorMap{{2, 1}})));
}

TEST_CASE("series of 1/(1-x)^2 and x/((1-x)(1-2x))") {
  const auto c = series_coefficients(
      RationalFunction(Polynomial::constant(1), FactoredDenominator(FactoredDenominator::FactorMap{{1, 2}})), 6);
  for (int n = 0; n <= 6; ++n) CHECK(c[n] == n + 1);
  const auto d = series_coefficients(
      RationalFunction(Polynomial::from_integers({0, 1}), FactoredDenominator(FactoredDenominator::FactorMap{{2, 1}, {1, 1}})), 10);
  for (int n = 0; n <= 10; ++n) CHECK(d[n] == pow(BigInt(2), n) - 1);
}

TEST_CASE("partial fractions of a small example") {
  // x / ((1-x)(1-2x)) = 1/(1-2x) - 1/(1-x)
  const auto pfe = partial_fractions(
      RationalFunction(Polynomial::from_integers({0, 1}), FactoredDenominator(FactoredDenominator::FactorMap{{2, 1}, {1, 1}})));
  REQUIRE(pfe.pole_terms.size() == 2);
  CHECK(pfe.pole_terms[0] == PoleTerm{2, 1, q(1)});
  CHECK(pfe.pole_terms[1] == PoleTerm{1, 1, q(-1)});
  CHECK(pfe.poly_part.is_zero());
}

TEST_CASE("property: partial fractions reassemble and reproduce the series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> k_dist(1, 4), e_dist(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    FactoredDenominator::FactorMap f;
    for (int j = 0; j < 3; ++j) f[k_dist(rng)] = e_dist(rng);
    const FactoredDenominator den(f);
    Polynomial num = random_poly(rng, den.degree() + 2);
    bool vanishes = num.is_zero();
    for (const auto& [k, e] : den.factors()) vanishes = vanishes || num(q(1, k)) == 0;
    if (vanishes) continue;
    const RationalFunction rf(num, den);
    const auto pfe = partial_fractions(rf);
    CHECK(reassemble_numerator(pfe, den) == num);
    const auto series = series_coefficients(rf, 20);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(expansion_coefficient(pfe, n) == series[n]);
  }
}

TEST_CASE("sturm audit") {
  // 2x + 4x^2: roots 0 and -1/2
  const auto a3 = sturm_real_root_audit(Polynomial::from_integers({0, 2, 4}));
  CHECK(a3.real_root_count == 2);
  CHECK(a3.all_roots_nonpositive);
  const auto none = sturm_real_root_audit(Polynomial::from_integers({1, 0, 1}));
  CHECK(none.real_root_count == 0);
  CHECK_FALSE(none.all_roots_nonpositive);
  // 2x + 28x^2 + 58x^3 + 32x^4
  const auto a5 = sturm_real_root_audit(Polynomial::from_integers({0, 2, 28, 58, 32}));
  CHECK(a5.real_root_count == 4);
  CHECK(a5.all_roots_nonpositive);
  // (x-1)^2 (x+2): one positive root (double), squarefree degree 2
  const auto rep = sturm_real_root_audit(Polynomial::from_integers({1, -1}) *
                                         Polynomial::from_integers({-1, 1}) *
                                         Polynomial::from_integers({2, 1}));
  CHECK(rep.real_root_count == 2);
  CHECK(rep.positive_root_count == 1);
  CHECK(rep.squarefree_degree == 2);
  CHECK_FALSE(rep.all_roots_nonpositive);
  CHECK_THROWS_AS(sturm_real_root_audit(Polynomial()), DomainError);
  const auto seq = sturm_sequence(Polynomial::from_integers({-2, 0, 1}));
  CHECK(sign_changes_at(seq, q(-2)) - sign_changes_at(seq, q(2)) == 2);
  CHECK(sign_changes_at_neg_infinity(seq) - sign_changes_at_pos_infinity(seq) == 2);
}
