#include "altruns/commands.hpp"

#include <cstdio>
#include <utility>
#include <vector>

#include "json.hpp"

#include "altruns/closed_form.hpp"
#include "altruns/errors.hpp"
#include "altruns/genfun.hpp"
#include "altruns/ratfun.hpp"
#include "altruns/run_counts.hpp"

namespace altruns {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

Json envelope(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_s(int s) {
  if (s < 1 || s > kDefaultSMax)
    throw DomainError("s must satisfy 1 <= s <= " + std::to_string(kDefaultSMax));
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kBrute: return "brute";
    case Method::kRecurrence: return "recurrence";
    case Method::kGenfun: return "genfun";
    case Method::kClosedForm: return "closed-form";
    case Method::kCensus: return "census";
    case Method::kAll: return "all";
  }
  return "?";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_string(const std::vector<Subset>& sets) {
  std::vector<std::string> parts;
  for (Subset s : sets) parts.push_back(to_string(s));
  return "(" + join(parts, ",") + ")";
}

Json sets_json(const std::vector<Subset>& sets) {
  Json a = Json::array();
  for (Subset s : sets) a.push_back(s.elements());
  return a;
}

// Throws DomainError/BudgetError when the method's cap excludes (n, s).
BigInt count_by(Method m, int n, int s, std::uint64_t budget) {
  switch (m) {
    case Method::kBrute: {
      if (n > kBruteForceMaxN)
        throw DomainError("brute force limited to n <= " + std::to_string(kBruteForceMaxN));
      const RunRow r = brute_force_row(n);
      return s <= n - 1 ? r[s - 1] : BigInt(0);
    }
    case Method::kRecurrence:
      return andre_triangle(n).at(n, s);
    case Method::kGenfun: {
      require_s(s);
      const auto c = series_coefficients(build_u(s).ratfun, static_cast<std::size_t>(n));
      return to_integer(c[n]);
    }
    case Method::kClosedForm:
      require_s(s);
      return evaluate_closed_form(formula_from_pfd(s), n);
    case Method::kCensus: {
      const CensusResult c = image_census(n, s, budget);
      // successes = 2^{s-2} P(n, s)
      return to_integer(Rational(c.successes) * pow(Rational(2), 2 - s));
    }
    case Method::kAll: break;
  }
  throw InternalError("unhandled method");
}

bool permitted(Method m, int n, int s, std::uint64_t budget) {
  switch (m) {
    case Method::kBrute: return n <= kBruteForceMaxN;
    case Method::kRecurrence: return true;
    case Method::kGenfun: return s <= kDefaultSMax;
    case Method::kClosedForm: return s <= kDefaultSMax && s <= n - 1;
    case Method::kCensus: {
      if (n > kMaxGroundSetSize) return false;
      std::uint64_t total = 1;
      for (int v = 0; v < n; ++v) {
        if (total > budget / static_cast<std::uint64_t>(s)) return false;
        total *= static_cast<std::uint64_t>(s);
      }
      return true;
    }
    case Method::kAll: return false;
  }
  return false;
}

std::string pole_term(const PoleTerm& t, bool first) {
  const Rational mag = abs(t.coefficient);
  std::string out = first ? (t.coefficient < 0 ? "-" : "") : (t.coefficient < 0 ? " - " : " + ");
  out += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
  out += "/(1-" + (t.base == 1 ? std::string() : std::to_string(t.base)) + "x)";
  if (t.multiplicity > 1) out += "^" + std::to_string(t.multiplicity);
  return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::kBrute, Method::kRecurrence, Method::kGenfun, Method::kClosedForm,
                   Method::kCensus, Method::kAll})
    if (s == method_name(m)) return m;
  return std::nullopt;
}

std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "all") return Suite::kAll;
  if (s == "triangle") return Suite::kTriangle;
  if (s == "genfun") return Suite::kGenfun;
  if (s == "closed-form") return Suite::kClosedForm;
  if (s == "bijection") return Suite::kBijection;
  if (s == "polynomial") return Suite::kPolynomial;
  return std::nullopt;
}

CommandOutput cmd_table(int n_max, Format f) {
  if (n_max < 2 || n_max > kTableMaxN)
    throw DomainError("n-max must satisfy 2 <= n-max <= " + std::to_string(kTableMaxN));
  const RunTriangle t = andre_triangle(n_max);
  std::string out;
  switch (f) {
    case Format::kText:
      for (int n = 2; n <= n_max; ++n) {
        std::vector<std::string> vals;
        for (const auto& v : t.row(n)) vals.push_back(to_string(v));
        out += std::to_string(n) + ": " + join(vals, " ") + "\n";
      }
      break;
    case Format::kCsv:
      out = "n,s,value\n";
      for (int n = 2; n <= n_max; ++n)
        for (int s = 1; s <= n - 1; ++s)
          out += std::to_string(n) + "," + std::to_string(s) + "," + to_string(t.at(n, s)) + "\n";
      break;
    case Format::kJson: {
      Json j = envelope("table");
      j["n_max"] = n_max;
      Json rows = Json::array();
      for (int n = 2; n <= n_max; ++n) {
        Json vals = Json::array();
        for (const auto& v : t.row(n)) vals.push_back(to_string(v));
        rows.push_back({{"n", n}, {"values", vals}});
      }
      j["rows"] = rows;
      out = dump(j);
      break;
    }
  }
  return {out, true};
}

CommandOutput cmd_count(int n, int s, Method m, Format f, std::uint64_t budget) {
  if (n < 2 || n > kCountMaxN)
    throw DomainError("n must satisfy 2 <= n <= " + std::to_string(kCountMaxN));
  if (s < 1) throw DomainError("s must be >= 1");

  std::vector<std::pair<Method, BigInt>> results;
  std::vector<Method> skipped;
  if (m == Method::kAll) {
    for (Method mm : {Method::kBrute, Method::kRecurrence, Method::kGenfun, Method::kClosedForm,
                      Method::kCensus}) {
      if (permitted(mm, n, s, budget))
        results.emplace_back(mm, count_by(mm, n, s, budget));
      else
        skipped.push_back(mm);
    }
  } else {
    results.emplace_back(m, count_by(m, n, s, budget));
  }
  bool agree = true;
  for (const auto& r : results) agree = agree && r.second == results.front().second;

  const std::string cell = "P(" + std::to_string(n) + "," + std::to_string(s) + ")";
  std::string out;
  switch (f) {
    case Format::kText:
      if (m != Method::kAll) {
        out = cell + " = " + to_string(results.front().second) + "  [" + method_name(m) + "]\n";
        break;
      }
      for (const auto& [mm, v] : results) out += std::string(method_name(mm)) + ": " + to_string(v) + "\n";
      for (Method mm : skipped) out += std::string(method_name(mm)) + ": skipped (out of range)\n";
      if (agree)
        out += cell + " = " + to_string(results.front().second) + "  [" +
               std::to_string(results.size()) + " methods agree]\n";
      else
        out += cell + ": methods disagree\n";
      break;
    case Format::kCsv:
      out = "n,s,method,value\n";
      for (const auto& [mm, v] : results)
        out += std::to_string(n) + "," + std::to_string(s) + "," + method_name(mm) + "," +
               to_string(v) + "\n";
      break;
    case Format::kJson: {
      Json j = envelope("count");
      j["n"] = n;
      j["s"] = s;
      j["method"] = method_name(m);
      if (m == Method::kAll) {
        Json vals = Json::object();
        for (const auto& [mm, v] : results) vals[method_name(mm)] = to_string(v);
        Json sk = Json::array();
        for (Method mm : skipped) sk.push_back(method_name(mm));
        j["values"] = vals;
        j["skipped"] = sk;
        j["agree"] = agree;
      }
      j["value"] = agree ? Json(to_string(results.front().second)) : Json(nullptr);
      out = dump(j);
      break;
    }
  }
  return {out, agree};
}

CommandOutput cmd_formula(int s, Format f) {
  require_s(s);
  const ClosedFormFormula cf = formula_from_pfd(s);
  std::string out;
  switch (f) {
    case Format::kText:
      out = render_formula(cf) + "\n";
      break;
    case Format::kCsv:
      out = "base,degree,coefficient\n";
      for (const auto& p : cf.psi)
        for (int d = 0; d <= p.in_n.degree(); ++d)
          out += std::to_string(p.base()) + "," + std::to_string(d) + "," +
                 to_string(p.in_n.coefficient(d)) + "\n";
      break;
    case Format::kJson: {
      Json j = envelope("formula");
      j["s"] = s;
      j["validity_floor"] = cf.validity_floor;
      j["text"] = render_formula_rhs(cf);
      Json terms = Json::array();
      for (const auto& p : cf.psi) {
        Json coeffs = Json::array();
        for (const auto& c : p.in_n.coefficients()) coeffs.push_back(to_string(c));
        terms.push_back({{"base", p.base()}, {"psi", coeffs}});
      }
      j["terms"] = terms;
      out = dump(j);
      break;
    }
  }
  return {out, true};
}

CommandOutput cmd_gf(int s, Format f) {
  require_s(s);
  const UsFunction u = build_u(s);
  const auto& num = u.ratfun.numerator();
  const auto& den = u.ratfun.denominator();
  std::string out;
  switch (f) {
    case Format::kText:
      out = "u_" + std::to_string(s) + "(x) = " + render_gf(u.ratfun) + "\n";
      break;
    case Format::kCsv:
      out = "part,index,value\n";
      for (int i = 0; i <= num.degree(); ++i)
        out += "numerator," + std::to_string(i) + "," + to_string(num.coefficient(i)) + "\n";
      for (const auto& [k, e] : den.factors())
        out += "denominator," + std::to_string(k) + "," + std::to_string(e) + "\n";
      break;
    case Format::kJson: {
      Json j = envelope("gf");
      j["s"] = s;
      j["text"] = render_gf(u.ratfun);
      Json coeffs = Json::array();
      for (const auto& c : num.coefficients()) coeffs.push_back(to_string(c));
      j["numerator"] = coeffs;
      Json factors = Json::array();
      for (const auto& [k, e] : den.factors()) factors.push_back({{"base", k}, {"multiplicity", e}});
      j["denominator"] = factors;
      out = dump(j);
      break;
    }
  }
  return {out, true};
}

CommandOutput cmd_pfd(int s, Format f) {
  require_s(s);
  const PartialFractionExpansion pfe = partial_fractions(build_u(s).ratfun);
  std::string out;
  switch (f) {
    case Format::kText: {
      std::string expr;
      for (std::size_t i = 0; i < pfe.pole_terms.size(); ++i)
        expr += pole_term(pfe.pole_terms[i], i == 0);
      if (!pfe.poly_part.is_zero()) {
        const std::string p = to_string(pfe.poly_part);
        if (expr.empty())
          expr = p;
        else
          expr += p.front() == '-' ? " - " + p.substr(1) : " + " + p;
      }
      out = "u_" + std::to_string(s) + "(x) = " + (expr.empty() ? "0" : expr) + "\n";
      break;
    }
    case Format::kCsv:
      out = "kind,base,order,coefficient\n";
      for (const auto& t : pfe.pole_terms)
        out += "pole," + std::to_string(t.base) + "," + std::to_string(t.multiplicity) + "," +
               to_string(t.coefficient) + "\n";
      for (int d = 0; d <= pfe.poly_part.degree(); ++d)
        out += "poly,," + std::to_string(d) + "," + to_string(pfe.poly_part.coefficient(d)) + "\n";
      break;
    case Format::kJson: {
      Json j = envelope("pfd");
      j["s"] = s;
      Json terms = Json::array();
      for (const auto& t : pfe.pole_terms)
        terms.push_back({{"base", t.base},
                         {"multiplicity", t.multiplicity},
                         {"coefficient", to_string(t.coefficient)}});
      j["terms"] = terms;
      Json poly = Json::array();
      for (const auto& c : pfe.poly_part.coefficients()) poly.push_back(to_string(c));
      j["poly_part"] = poly;
      out = dump(j);
      break;
    }
  }
  return {out, true};
}

CommandOutput cmd_census(int n_lo, int n_hi, int s_lo, int s_hi, Format f, std::uint64_t budget) {
  if (n_lo < 2 || n_hi < n_lo || n_hi > kMaxGroundSetSize)
    throw DomainError("n range must satisfy 2 <= n_lo <= n_hi <= " +
                      std::to_string(kMaxGroundSetSize));
  if (s_lo < 1 || s_hi < s_lo) throw DomainError("s range must satisfy 1 <= s_lo <= s_hi");

  std::vector<CensusResult> cells;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int s = s_lo; s <= s_hi; ++s) cells.push_back(image_census(n, s, budget));
  bool ok = true;
  for (const auto& c : cells) ok = ok && c.identity_holds() && c.bounds_hold();

  std::string out;
  switch (f) {
    case Format::kText:
      for (const auto& c : cells) {
        out += "n=" + std::to_string(c.n) + " s=" + std::to_string(c.s) + ": " +
               to_string(c.successes) + " of " + to_string(c.total) + " tuples (expected " +
               to_string(c.expected) + ", lower bound " + to_string(c.bonferroni) + ") " +
               (c.identity_holds() && c.bounds_hold() ? "ok" : "MISMATCH") + "\n";
      }
      break;
    case Format::kCsv:
      out = "n,s,successes,s^n,bonferroni_bound\n";
      for (const auto& c : cells)
        out += std::to_string(c.n) + "," + std::to_string(c.s) + "," + to_string(c.successes) +
               "," + to_string(c.total) + "," + to_string(c.bonferroni) + "\n";
      break;
    case Format::kJson: {
      Json j = envelope("census");
      Json rows = Json::array();
      for (const auto& c : cells) {
        Json fail = Json::object();
        for (std::size_t k = 1; k < kFailureClassCount; ++k)
          fail[to_string(static_cast<FailureClass>(k))] = c.failures[k];
        rows.push_back({{"n", c.n},
                        {"s", c.s},
                        {"successes", to_string(c.successes)},
                        {"total", to_string(c.total)},
                        {"expected", to_string(c.expected)},
                        {"bonferroni_bound", to_string(c.bonferroni)},
                        {"identity_holds", c.identity_holds()},
                        {"bounds_hold", c.bounds_hold()},
                        {"failures", fail}});
      }
      j["cells"] = rows;
      j["ok"] = ok;
      out = dump(j);
      break;
    }
  }
  return {out, ok};
}

CommandOutput cmd_trace(const TTuple& t, Format f) {
  const ReconstructionTrace tr = reconstruct_trace(t);
  const bool found = tr.failure == FailureClass::kNone;
  std::string out;
  switch (f) {
    case Format::kText: {
      out = "T = " + tuple_string(t.sets) + " over [" + std::to_string(t.n) + "]\n";
      std::vector<std::string> us;
      for (std::size_t i = 0; i < tr.unions.size(); ++i)
        us.push_back("T" + std::to_string(i + 1) + "|T" + std::to_string(i + 2) + " = " +
                     to_string(tr.unions[i]));
      out += "step 1 unions: " + (us.empty() ? std::string("none") : join(us, ", ")) + "\n";
      if (tr.early_exit_at != 0) {
        out += "stopped: union " + std::to_string(tr.early_exit_at) + " is empty\n";
      } else {
        std::vector<std::string> es, hs;
        for (std::size_t i = 0; i < tr.deleted.size(); ++i)
          es.push_back("e" + std::to_string(i + 1) + "=" + std::to_string(tr.deleted[i]));
        for (int h : tr.choices.h) hs.push_back(std::to_string(h));
        out += "step 2 shared elements: " + (es.empty() ? std::string("none") : join(es, ", ")) +
               "\n";
        out += "step 3 choices: h = (" + join(hs, ",") + ")\n";
        out += "step 4 candidate: S = " + tuple_string(tr.candidate) + "\n";
        if (!found) out += "violations: " + describe_violations(tr.violations) + "\n";
      }
      out += found ? std::string("result: preimage\n")
                   : "result: no preimage (" + std::string(to_string(tr.failure)) + ")\n";
      break;
    }
    case Format::kCsv: {
      out = "step,index,value\n";
      for (std::size_t i = 0; i < tr.unions.size(); ++i)
        out += "union," + std::to_string(i + 1) + ",\"" + to_string(tr.unions[i]) + "\"\n";
      for (std::size_t i = 0; i < tr.deleted.size(); ++i)
        out += "shared," + std::to_string(i + 1) + "," + std::to_string(tr.deleted[i]) + "\n";
      for (std::size_t i = 0; i < tr.choices.h.size(); ++i)
        out += "choice," + std::to_string(i + 1) + "," + std::to_string(tr.choices.h[i]) + "\n";
      for (std::size_t i = 0; i < tr.candidate.size(); ++i)
        out += "candidate," + std::to_string(i + 1) + ",\"" + to_string(tr.candidate[i]) + "\"\n";
      out += "result,," + std::string(to_string(tr.failure)) + "\n";
      break;
    }
    case Format::kJson: {
      Json j = envelope("trace");
      j["n"] = t.n;
      j["t"] = sets_json(t.sets);
      j["unions"] = sets_json(tr.unions);
      j["early_exit_at"] = tr.early_exit_at == 0 ? Json(nullptr) : Json(tr.early_exit_at);
      j["shared"] = tr.deleted;
      j["choices"] = tr.choices.h;
      j["candidate"] = sets_json(tr.candidate);
      j["violations"] = tr.violations == 0 ? Json::array() : Json::array({describe_violations(tr.violations)});
      j["result"] = to_string(tr.failure);
      out = dump(j);
      break;
    }
  }
  return {out, true};
}

CommandOutput cmd_verify(Suite suite, Format f) {
  const std::vector<CheckResult> checks = run_suite(suite);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  const auto ms = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return std::string(buf);
  };
  std::string out;
  switch (f) {
    case Format::kText: {
      std::size_t passed = 0;
      for (const auto& c : checks) {
        passed += c.passed ? 1 : 0;
        out += std::string(c.passed ? "PASS " : "FAIL ") + c.suite + "/" + c.name + " (" +
               ms(c.millis) + " ms)" + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
      }
      out += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
      break;
    }
    case Format::kCsv:
      out = "suite,check,passed,millis,detail\n";
      for (const auto& c : checks)
        out += c.suite + "," + c.name + "," + (c.passed ? "true" : "false") + "," + ms(c.millis) +
               ",\"" + c.detail + "\"\n";
      break;
    case Format::kJson: {
      Json j = envelope("verify");
      Json arr = Json::array();
      for (const auto& c : checks)
        arr.push_back({{"suite", c.suite},
                       {"check", c.name},
                       {"passed", c.passed},
                       {"millis", c.millis},
                       {"detail", c.detail}});
      j["checks"] = arr;
      j["ok"] = ok;
      out = dump(j);
      break;
    }
  }
  return {out, ok};
}

}  // namespace altruns
