// altruns: command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "altruns/altruns.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

using SessionPtr = std::unique_ptr<altruns_session, decltype(&altruns_session_destroy)>;

int finish(altruns_session* session, altruns_status st) {
  std::fputs(altruns_session_output(session), stdout);
  std::fflush(stdout);
  switch (st) {
    case ALTRUNS_OK:
      return kExitOk;
    case ALTRUNS_CHECK_FAILED:
      std::fprintf(stderr, "altruns: %s\n", altruns_session_error(session));
      return kExitCheckFailed;
    case ALTRUNS_INVALID_ARGUMENT:
    case ALTRUNS_BUDGET_EXCEEDED:
      std::fprintf(stderr, "altruns: usage error: %s\n", altruns_session_error(session));
      return kExitUsage;
    case ALTRUNS_INTERNAL_ERROR:
      break;
  }
  std::fprintf(stderr, "altruns: internal error: %s\n", altruns_session_error(session));
  return kExitCheckFailed;
}

// "1,2,3//4,5,6" -> part_of_value with parts separated by '/'.
struct ParsedSets {
  int n = 0;
  int parts = 0;
  std::vector<int> part_of_value;
};

ParsedSets parse_sets(const std::string& text, int n_flag) {
  std::vector<std::vector<int>> parts(1);
  std::string tok;
  const auto flush = [&] {
    if (tok.empty()) return;
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument("bad element '" + tok + "'");
    parts.back().push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (c == '/') {
      flush();
      parts.emplace_back();
    } else if (c == ',') {
      if (tok.empty()) throw std::invalid_argument("empty element in --sets");
      flush();
    } else if (c != ' ') {
      tok += c;
    }
  }
  flush();

  ParsedSets out;
  out.parts = static_cast<int>(parts.size());
  int max_v = 0;
  for (const auto& p : parts)
    for (int v : p) max_v = std::max(max_v, v);
  out.n = n_flag > 0 ? n_flag : max_v;
  if (out.n < 1) throw std::invalid_argument("--sets names no elements");
  out.part_of_value.assign(static_cast<std::size_t>(out.n), 0);
  for (int i = 0; i < out.parts; ++i)
    for (int v : parts[i]) {
      if (v > out.n) throw std::invalid_argument(std::to_string(v) + " lies outside [n]");
      if (out.part_of_value[v - 1] != 0)
        throw std::invalid_argument(std::to_string(v) + " appears in two parts");
      out.part_of_value[v - 1] = i + 1;
    }
  for (int v = 1; v <= out.n; ++v)
    if (out.part_of_value[v - 1] == 0)
      throw std::invalid_argument("parts do not cover " + std::to_string(v));
  return out;
}

template <typename T>
bool lookup(altruns_status (*parse)(const char*, T*), const std::string& name, T* out,
            const char* what) {
  if (parse(name.c_str(), out) == ALTRUNS_OK) return true;
  std::fprintf(stderr, "altruns: usage error: unknown %s '%s'\n", what, name.c_str());
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutations of [n] with s alternating runs: tables, formulas, generating "
               "functions, bijection traces and verification."};
  app.set_version_flag("--version", std::string(altruns_version()));
  app.require_subcommand(1);

  std::string format = "text";
  int n = 0, s = 0, n_max = 0, s_max = 0;
  std::string method = "recurrence", suite = "all", sets;
  std::uint64_t budget = ALTRUNS_DEFAULT_BUDGET;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* table = app.add_subcommand("table", "Triangle P(n,s) for 2 <= n <= n-max");
  table->add_option("--n-max", n_max, "Largest n (2..200)")->required();
  add_format(table);

  auto* count = app.add_subcommand("count", "P(n,s) by one method, or all of them");
  count->add_option("--n", n, "Permutation length")->required();
  count->add_option("--s", s, "Number of runs")->required();
  count->add_option("--method", method, "brute|recurrence|genfun|closed-form|census|all")
      ->capture_default_str();
  count->add_option("--budget", budget, "Census enumeration budget (tuples)")
      ->capture_default_str();
  add_format(count);

  auto* formula = app.add_subcommand("formula", "Closed formula for P(n,s), 1 <= s <= 12");
  auto* gf = app.add_subcommand("gf", "Generating function u_s(x), 1 <= s <= 12");
  auto* pfd = app.add_subcommand("pfd", "Partial fractions of u_s(x), 1 <= s <= 12");
  for (auto* sub : {formula, gf, pfd}) {
    sub->add_option("--s", s, "Number of runs")->required();
    add_format(sub);
  }

  auto* census = app.add_subcommand(
      "census", "Count images of the set-tuple injection among all maps [n] -> [s]");
  census->add_option("--n", n, "Single n");
  census->add_option("--s", s, "Single s");
  census->add_option("--n-max", n_max, "Grid over 2 <= n <= n-max");
  census->add_option("--s-max", s_max, "Grid over 1 <= s <= s-max");
  census->add_option("--budget", budget, "Enumeration budget per cell (tuples)")
      ->capture_default_str();
  add_format(census);

  auto* trace = app.add_subcommand("trace", "Reconstruction steps for one T-tuple");
  trace->add_option("--sets", sets, "Parts separated by '/', e.g. \"1/2,3\" or \"1,2,3//4,5,6\"")
      ->required();
  trace->add_option("--n", n, "Ground set size (default: largest element)");
  add_format(trace);

  auto* verify = app.add_subcommand("verify", "Run invariant checks");
  verify->add_option("--suite", suite, "all|triangle|genfun|closed-form|bijection|polynomial")
      ->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  altruns_format fmt{};
  if (!lookup(altruns_parse_format, format, &fmt, "format")) return kExitUsage;

  SessionPtr session(altruns_session_create(), &altruns_session_destroy);
  if (!session) {
    std::fprintf(stderr, "altruns: out of memory\n");
    return kExitCheckFailed;
  }
  altruns_session* ss = session.get();

  if (table->parsed()) return finish(ss, altruns_table(ss, n_max, fmt));
  if (count->parsed()) {
    altruns_method m{};
    if (!lookup(altruns_parse_method, method, &m, "method")) return kExitUsage;
    return finish(ss, altruns_count(ss, n, s, m, budget, fmt));
  }
  if (formula->parsed()) return finish(ss, altruns_formula(ss, s, fmt));
  if (gf->parsed()) return finish(ss, altruns_gf(ss, s, fmt));
  if (pfd->parsed()) return finish(ss, altruns_pfd(ss, s, fmt));
  if (census->parsed()) {
    const bool have_n = census->count("--n") > 0, have_s = census->count("--s") > 0;
    const bool grid_n = census->count("--n-max") > 0, grid_s = census->count("--s-max") > 0;
    if (have_n == grid_n || have_s == grid_s) {
      std::fprintf(stderr, "altruns: usage error: census takes one of --n/--n-max and one of "
                           "--s/--s-max\n");
      return kExitUsage;
    }
    const int n_lo = have_n ? n : 2, n_hi = have_n ? n : n_max;
    const int s_lo = have_s ? s : 1, s_hi = have_s ? s : s_max;
    return finish(ss, altruns_census(ss, n_lo, n_hi, s_lo, s_hi, budget, fmt));
  }
  if (trace->parsed()) {
    ParsedSets p;
    try {
      p = parse_sets(sets, n);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "altruns: usage error: %s\n", e.what());
      return kExitUsage;
    }
    return finish(ss, altruns_trace(ss, p.n, p.parts, p.part_of_value.data(), fmt));
  }
  if (verify->parsed()) {
    altruns_suite su{};
    if (!lookup(altruns_parse_suite, suite, &su, "suite")) return kExitUsage;
    return finish(ss, altruns_verify(ss, su, fmt));
  }
  return kExitUsage;
}
