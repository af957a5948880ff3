#include "doctest.h"

#include "altruns/errors.hpp"
#include "altruns/run_counts.hpp"
#include "altruns/sturm.hpp"
#include "oracles.hpp"

using namespace altruns;

namespace {

RunRow row_of(const std::vector<long>& v) { return RunRow(v.begin(), v.end()); }

}  // namespace

TEST_CASE("count_runs on small permutations") {
  CHECK(count_runs(Permutation({1, 2})) == 1);
  CHECK(count_runs(Permutation({2, 1})) == 1);
  CHECK(count_runs(Permutation({1, 3, 2})) == 2);
  CHECK(count_runs(Permutation({7, 2, 3, 8, 5, 1, 4, 6, 9})) == 4);
  CHECK(count_runs(Permutation({1, 2, 3, 4, 5})) == 1);
  CHECK(count_runs(Permutation({2, 1, 4, 3, 6, 5})) == 5);
  CHECK_THROWS_AS(count_runs(Permutation({1})), DomainError);
  CHECK(first_run_up(Permutation({1, 3, 2})));
  CHECK_FALSE(first_run_up(Permutation({3, 1, 2})));
}

TEST_CASE("permutations are validated") {
  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({1, 3}), DomainError);
}

TEST_CASE("brute force matches the independent enumerator and known rows") {
  for (int n = 2; n <= 8; ++n) {
    const auto counts = oracle::run_counts(n);
    const RunRow got = brute_force_row(n);
    REQUIRE(static_cast<int>(got.size()) == n - 1);
    for (int s = 1; s <= n - 1; ++s) CHECK(got[s - 1] == counts[s]);
    CHECK(got == row_of(oracle::known_rows()[n - 2]));
  }
  CHECK_THROWS_AS(brute_force_row(1), DomainError);
  CHECK_THROWS_AS(brute_force_row(kBruteForceMaxN + 1), DomainError);
}

TEST_CASE("first-run-up permutations are exactly half") {
  for (int n = 2; n <= 8; ++n) {
    RunRow half = brute_force_row_first_up(n);
    for (auto& v : half) v *= 2;
    CHECK(half == brute_force_row(n));
  }
}

TEST_CASE("recurrence triangle") {
  const RunTriangle t = andre_triangle(12);
  CHECK(t.n_max() == 12);
  for (int n = 2; n <= 8; ++n) CHECK(t.row(n) == row_of(oracle::known_rows()[n - 2]));
  CHECK(t.at(7, 4) == 1852);
  CHECK(t.at(5, 5) == 0);
  CHECK(t.at(5, 0) == 0);
  CHECK(andre_base_row() == RunRow{2});
  CHECK_THROWS_AS(t.row(13), DomainError);
  CHECK_THROWS_AS(andre_triangle(1), DomainError);
  // The last entry of every row counts the alternating permutations (2 E_n).
  const long alternating[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765};
  for (int n = 2; n <= 12; ++n) CHECK(t.at(n, n - 1) == 2 * alternating[n]);
}

TEST_CASE("property: rows sum to n! and P(n,2) = 2^n - 4") {
  const RunTriangle t = andre_triangle(40);
  for (int n = 2; n <= 40; ++n) {
    BigInt sum = 0;
    for (const auto& v : t.row(n)) sum += v;
    CHECK(sum == factorial(n));
    if (n >= 3) CHECK(t.at(n, 2) == pow(BigInt(2), n) - 4);
    CHECK(t.at(n, 1) == 2);
  }
}

TEST_CASE("run polynomials and log-concavity") {
  const RunTriangle t = andre_triangle(12);
  for (int n = 2; n <= 12; ++n) {
    const RunPolynomial p = run_polynomial(n);
    CHECK(p.n == n);
    CHECK(p.poly.degree() == n - 1);
    CHECK(p.poly.coefficient(0) == 0);
    for (int s = 1; s <= n - 1; ++s) CHECK(p.poly.coefficient(s) == Rational(t.at(n, s)));
    CHECK(log_concavity_check(t.row(n)));
  }
  CHECK_FALSE(log_concavity_check(RunRow{1, 1, 5}));
  CHECK(log_concavity_check(RunRow{2}));
}

TEST_CASE("run polynomials are real-rooted with a repeated root at -1") {
  for (int n = 2; n <= 10; ++n) {
    const Polynomial p = run_polynomial(n).poly;
    const RealRootAudit a = sturm_real_root_audit(p);
    CHECK(a.all_roots_nonpositive);
    CHECK(a.real_root_count == a.squarefree_degree);
    // (1 + x)^{floor((n-2)/2)} divides P_n.
    Polynomial q = p;
    for (int k = 0; k < (n - 2) / 2; ++k) {
      const DivRem dr = divrem(q, Polynomial::from_integers({1, 1}));
      CHECK(dr.remainder.is_zero());
      q = dr.quotient;
    }
    if (n >= 6) CHECK(a.squarefree_degree < n - 1);
  }
}
