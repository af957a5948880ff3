#include "altruns/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <utility>

#include "altruns/bijection.hpp"
#include "altruns/closed_form.hpp"
#include "altruns/genfun.hpp"
#include "altruns/ratfun.hpp"
#include "altruns/run_counts.hpp"
#include "altruns/sturm.hpp"

namespace altruns {

namespace {

// A check returns "" on success, otherwise the first discrepancy.
using CheckFn = std::function<std::string()>;

CheckResult timed(const char* suite, const char* name, const CheckFn& fn) {
  CheckResult r;
  r.suite = suite;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = fn();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
  return r;
}

std::string cell(int n, int s) {
  return "(" + std::to_string(n) + "," + std::to_string(s) + ")";
}

RunRow to_row(std::initializer_list<long> v) { return RunRow(v.begin(), v.end()); }

const RunTriangle& triangle() {
  static const RunTriangle t = andre_triangle(60);
  return t;
}

// ---- triangle ----

std::string known_rows_check() {
  const std::vector<RunRow> want = {to_row({2}), to_row({2, 4}), to_row({2, 12, 10}),
                                    to_row({2, 28, 58, 32})};
  for (int n = 2; n <= 5; ++n)
    if (triangle().row(n) != want[n - 2]) return "row " + std::to_string(n) + " differs";
  return {};
}

std::string corrected_row_8() {
  if (triangle().row(8) != to_row({2, 252, 2766, 9576, 14622, 10332, 2770}))
    return "row 8 differs";
  return {};
}

std::string brute_vs_recurrence() {
  for (int n = 2; n <= 9; ++n)
    if (brute_force_row(n) != triangle().row(n)) return "row " + std::to_string(n) + " differs";
  return {};
}

std::string first_run_up_half() {
  for (int n = 2; n <= 9; ++n) {
    RunRow half = brute_force_row_first_up(n);
    for (auto& v : half) v *= 2;
    if (half != triangle().row(n)) return "row " + std::to_string(n);
  }
  return {};
}

std::string row_sums() {
  for (int n = 2; n <= 60; ++n) {
    const RunRow& r = triangle().row(n);
    const BigInt sum = std::accumulate(r.begin(), r.end(), BigInt(0));
    if (sum != factorial(n)) return "row " + std::to_string(n) + " does not sum to n!";
  }
  return {};
}

std::string two_runs() {
  for (int n = 3; n <= 60; ++n)
    if (triangle().at(n, 2) != pow(BigInt(2), n) - 4) return cell(n, 2);
  return {};
}

// ---- genfun ----

std::string displayed_gfs() {
  const std::vector<std::string> want = {
      "4x^3 / ((1-2x)(1-x))",
      "2x^4(5-6x) / ((1-3x)(1-2x)(1-x)^2)",
      "4x^5(8-29x+24x^2) / ((1-4x)(1-3x)(1-2x)^2(1-x)^2)",
  };
  const auto us = build_us(4);
  for (int s = 2; s <= 4; ++s) {
    const std::string got = render_gf(us[s - 1].ratfun);
    if (got != want[s - 2]) return "u_" + std::to_string(s) + " = " + got;
  }
  return {};
}

std::string degrees() {
  for (const auto& u : build_us(kDefaultSMax)) {
    const DegreeAudit a = degree_audit(u);
    if (!a.ok()) return "s=" + std::to_string(u.s) + ": " + a.failures.front();
  }
  return {};
}

std::string ratio_identities() {
  for (int s = 2; s <= kDefaultSMax; ++s) {
    const auto r = ratio_identities_check(s);
    if (!r.ok()) return "s=" + std::to_string(s) + ": " + r.failures.front();
  }
  return {};
}

std::string series_vs_recurrence() {
  const auto us = build_us(8);
  for (const auto& u : us) {
    const auto c = series_coefficients(u.ratfun, 25);
    for (int n = 2; n <= 25; ++n)
      if (c[n] != Rational(triangle().at(n, u.s))) return cell(n, u.s);
  }
  return {};
}

// ---- closed-form ----

std::string u4_partial_fractions() {
  const auto pfe = partial_fractions(build_u(4).ratfun);
  const std::vector<PoleTerm> want = {
      {4, 1, make_rational(1, 4)}, {3, 1, Rational(-1)},         {2, 2, make_rational(-1, 2)},
      {2, 1, make_rational(7, 2)}, {1, 2, Rational(2)},          {1, 1, Rational(-9)},
  };
  if (pfe.pole_terms != want) return "pole terms differ";
  if (pfe.poly_part != Polynomial({make_rational(19, 4), Rational(2)}))
    return "polynomial part " + to_string(pfe.poly_part);
  return {};
}

std::string psi_routes() {
  const auto us = build_us(10);
  for (int s = 2; s <= 10; ++s) {
    const auto pfd = formula_from_pfd(us[s - 1]);
    const auto rec = psi_from_recurrence(s, s - 1);
    for (int i = 0; i < s; ++i)
      if (pfd.psi[i].in_n != rec[i].in_n)
        return "s=" + std::to_string(s) + " psi_" + std::to_string(i);
  }
  return {};
}

std::string psi_closed_forms() {
  const auto us = build_us(kDefaultSMax);
  for (int s = 5; s <= kDefaultSMax; ++s) {
    const auto f = formula_from_pfd(us[s - 1]);
    for (long n = 1; n <= 30; ++n) {
      const Rational N(n), S(s);
      const Rational p1 = -2 * k_constant(s - 1);
      const Rational p2 = Rational(1, 4) * k_constant(s - 2) * (S + 8 - 2 * N);
      const Rational p3 = Rational(1, 2) * k_constant(s - 3) * (2 * N - S - 3);
      const Rational p4 = Rational(1, 32) * k_constant(s - 4) *
                          (4 * N * N - 4 * N * (S + 8) + S * S + 15 * S + 32);
      const Rational want[] = {p1, p2, p3, p4};
      for (int i = 1; i <= 4; ++i)
        if (f.psi[i].in_n(N) != want[i - 1])
          return "s=" + std::to_string(s) + " psi_" + std::to_string(i) +
                 " at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string closed_form_exact() {
  const auto us = build_us(10);
  for (const auto& u : us) {
    const auto f = formula_from_pfd(u);
    for (long n = std::max(f.validity_floor, u.s + 1); n <= 30; ++n)
      if (evaluate_closed_form(f, n) != triangle().at(static_cast<int>(n), u.s))
        return cell(static_cast<int>(n), u.s);
  }
  return {};
}

std::string asymptotics() {
  for (int s = 2; s <= 4; ++s) {
    std::vector<int> ns;
    for (int n = 2 * s; n <= 60; ++n) ns.push_back(n);
    const auto rep = asymptotic_report(s, ns);
    Rational prev = -1;
    for (const auto& e : rep) {
      const Rational err = abs(e.relative_error);
      if (prev >= 0 && err > prev) return "s=" + std::to_string(s) + " increases at n=" +
                                           std::to_string(e.n);
      prev = err;
      if (s == 2 && err != make_rational(4, pow(BigInt(2), e.n)))
        return "s=2 |error| is not 4/2^n at n=" + std::to_string(e.n);
    }
    if (!(prev < Rational(1, 1000))) return "s=" + std::to_string(s) + " error at n=60 >= 1e-3";
  }
  return {};
}

// ---- bijection ----

std::vector<Permutation> first_up_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (first_run_up(p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string codec_roundtrip() {
  for (int n = 2; n <= 8; ++n)
    for (const auto& p : first_up_permutations(n)) {
      const SetTuple t = permutation_to_settuple(p);
      if (settuple_violations(t) != 0 || t.s() != count_runs(p) ||
          settuple_to_permutation(t) != p)
        return "n=" + std::to_string(n);
    }
  return {};
}

std::string phi_roundtrip() {
  for (int n = 2; n <= 8; ++n)
    for (const auto& p : first_up_permutations(n)) {
      const SetTuple t = permutation_to_settuple(p);
      const int s = t.s();
      if (s > 5) continue;
      for (unsigned mask = 0; mask < (1U << (s - 1)); ++mask) {
        ChoiceSequence h;
        for (int i = 1; i <= s - 1; ++i) h.h.push_back(i + ((mask >> (i - 1)) & 1U));
        const auto back = reconstruct(phi(h, t));
        if (!back || back->choices != h || back->sets != t) return cell(n, s);
      }
    }
  return {};
}

std::vector<std::pair<int, int>> census_grid() {
  std::vector<std::pair<int, int>> g;
  for (int n = 2; n <= 8; ++n)
    for (int s = 1; s <= std::min(5, n - 1); ++s) g.emplace_back(n, s);
  g.emplace_back(10, 2);
  g.emplace_back(10, 3);
  return g;
}

std::string census_identity(std::vector<CensusResult>& out) {
  for (const auto& [n, s] : census_grid()) out.push_back(image_census(n, s));
  for (const auto& c : out) {
    if (!c.identity_holds())
      return cell(c.n, c.s) + ": " + to_string(c.successes) + " images, expected " +
             to_string(c.expected);
    if (!c.bounds_hold()) return cell(c.n, c.s) + ": bounds violated";
  }
  return {};
}

std::string failure_classes(const std::vector<CensusResult>& cs) {
  if (cs.empty()) return "census unavailable";
  std::array<std::uint64_t, kFailureClassCount> total{};
  for (const auto& c : cs) {
    for (std::size_t k = 0; k < kFailureClassCount; ++k) total[k] += c.failures[k];
    if (c.large_part_misses != 0) return cell(c.n, c.s) + ": miss with all parts >= 2";
  }
  if (total[static_cast<std::size_t>(FailureClass::kOther)] != 0)
    return std::to_string(total[static_cast<std::size_t>(FailureClass::kOther)]) +
           " unclassified failures";
  return {};
}

// ---- polynomial ----

std::string run_poly_vs_andre() {
  for (int n = 2; n <= 12; ++n) {
    const auto rp = run_polynomial(n);
    for (int s = 1; s <= n - 1; ++s)
      if (rp.poly.coefficient(s) != Rational(triangle().at(n, s))) return cell(n, s);
  }
  return {};
}

std::string log_concave() {
  for (int n = 2; n <= 12; ++n)
    if (!log_concavity_check(triangle().row(n))) return "row " + std::to_string(n);
  return {};
}

std::string real_rooted() {
  for (int n = 2; n <= 10; ++n) {
    const auto a = sturm_real_root_audit(run_polynomial(n).poly);
    if (!a.all_roots_nonpositive || a.real_root_count != a.squarefree_degree)
      return "n=" + std::to_string(n) + ": " + std::to_string(a.real_root_count) +
             " real roots of " + std::to_string(a.squarefree_degree);
  }
  return {};
}

bool selected(Suite want, Suite s) { return want == Suite::kAll || want == s; }

}  // namespace

std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  if (selected(suite, Suite::kTriangle)) {
    out.push_back(timed("triangle", "known-rows", known_rows_check));
    out.push_back(timed("triangle", "corrected-row-8", corrected_row_8));
    out.push_back(timed("triangle", "brute-vs-recurrence", brute_vs_recurrence));
    out.push_back(timed("triangle", "first-run-up-half", first_run_up_half));
    out.push_back(timed("triangle", "row-sums", row_sums));
    out.push_back(timed("triangle", "two-runs", two_runs));
  }
  if (selected(suite, Suite::kGenfun)) {
    out.push_back(timed("genfun", "displayed-forms", displayed_gfs));
    out.push_back(timed("genfun", "degrees", degrees));
    out.push_back(timed("genfun", "ratio-identities", ratio_identities));
    out.push_back(timed("genfun", "series-vs-recurrence", series_vs_recurrence));
  }
  if (selected(suite, Suite::kClosedForm)) {
    out.push_back(timed("closed-form", "u4-partial-fractions", u4_partial_fractions));
    out.push_back(timed("closed-form", "psi-route-agreement", psi_routes));
    out.push_back(timed("closed-form", "psi-low-order", psi_closed_forms));
    out.push_back(timed("closed-form", "exact-values", closed_form_exact));
    out.push_back(timed("closed-form", "asymptotics", asymptotics));
  }
  if (selected(suite, Suite::kBijection)) {
    out.push_back(timed("bijection", "codec-roundtrip", codec_roundtrip));
    out.push_back(timed("bijection", "phi-roundtrip", phi_roundtrip));
    std::vector<CensusResult> cs;
    out.push_back(timed("bijection", "census-identity", [&] { return census_identity(cs); }));
    out.push_back(timed("bijection", "failures-classified", [&] { return failure_classes(cs); }));
  }
  if (selected(suite, Suite::kPolynomial)) {
    out.push_back(timed("polynomial", "run-polynomial-vs-andre", run_poly_vs_andre));
    out.push_back(timed("polynomial", "log-concavity", log_concave));
    out.push_back(timed("polynomial", "real-rooted", real_rooted));
  }
  return out;
}

}  // namespace altruns
