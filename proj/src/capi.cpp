#include "altruns/altruns.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "altruns/commands.hpp"
#include "altruns/errors.hpp"
#include "altruns/run_counts.hpp"

struct altruns_session {
  std::string output;
  std::string error;
};

struct altruns_triangle {
  int n_max = 0;
  std::vector<std::vector<std::string>> rows;  // rows[n-2][s-1]
};

namespace {

using namespace altruns;

Format to_format(altruns_format f) {
  switch (f) {
    case ALTRUNS_FORMAT_TEXT: return Format::kText;
    case ALTRUNS_FORMAT_JSON: return Format::kJson;
    case ALTRUNS_FORMAT_CSV: return Format::kCsv;
  }
  throw DomainError("unknown format");
}

Method to_method(altruns_method m) {
  switch (m) {
    case ALTRUNS_METHOD_BRUTE: return Method::kBrute;
    case ALTRUNS_METHOD_RECURRENCE: return Method::kRecurrence;
    case ALTRUNS_METHOD_GENFUN: return Method::kGenfun;
    case ALTRUNS_METHOD_CLOSED_FORM: return Method::kClosedForm;
    case ALTRUNS_METHOD_CENSUS: return Method::kCensus;
    case ALTRUNS_METHOD_ALL: return Method::kAll;
  }
  throw DomainError("unknown method");
}

Suite to_suite(altruns_suite s) {
  switch (s) {
    case ALTRUNS_SUITE_ALL: return Suite::kAll;
    case ALTRUNS_SUITE_TRIANGLE: return Suite::kTriangle;
    case ALTRUNS_SUITE_GENFUN: return Suite::kGenfun;
    case ALTRUNS_SUITE_CLOSED_FORM: return Suite::kClosedForm;
    case ALTRUNS_SUITE_BIJECTION: return Suite::kBijection;
    case ALTRUNS_SUITE_POLYNOMIAL: return Suite::kPolynomial;
  }
  throw DomainError("unknown suite");
}

// Runs fn, storing its output; maps exceptions onto status codes.
template <typename Fn>
altruns_status guarded(altruns_session* session, Fn&& fn) {
  if (session == nullptr) return ALTRUNS_INVALID_ARGUMENT;
  session->output.clear();
  session->error.clear();
  try {
    CommandOutput out = fn();
    session->output = std::move(out.text);
    if (!out.ok) {
      session->error = "check failed";
      return ALTRUNS_CHECK_FAILED;
    }
    return ALTRUNS_OK;
  } catch (const DomainError& e) {
    session->error = e.what();
    return ALTRUNS_INVALID_ARGUMENT;
  } catch (const BudgetError& e) {
    session->error = e.what();
    return ALTRUNS_BUDGET_EXCEEDED;
  } catch (const std::bad_alloc&) {
    session->error = "out of memory";
  } catch (const std::exception& e) {
    session->error = e.what();
  } catch (...) {
    session->error = "unknown error";
  }
  return ALTRUNS_INTERNAL_ERROR;
}

template <typename T, typename Parse>
altruns_status parse_into(const char* name, T* out, Parse parse) {
  if (name == nullptr || out == nullptr) return ALTRUNS_INVALID_ARGUMENT;
  if (!parse(name)) return ALTRUNS_INVALID_ARGUMENT;
  return ALTRUNS_OK;
}

}  // namespace

extern "C" {

const char* altruns_version(void) { return "1.0.0"; }

const char* altruns_status_string(altruns_status status) {
  switch (status) {
    case ALTRUNS_OK: return "ok";
    case ALTRUNS_CHECK_FAILED: return "check failed";
    case ALTRUNS_INVALID_ARGUMENT: return "invalid argument";
    case ALTRUNS_BUDGET_EXCEEDED: return "budget exceeded";
    case ALTRUNS_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

altruns_status altruns_parse_format(const char* name, altruns_format* out) {
  return parse_into(name, out, [&](const char* s) {
    const auto f = parse_format(s);
    if (!f) return false;
    *out = *f == Format::kText ? ALTRUNS_FORMAT_TEXT
           : *f == Format::kJson ? ALTRUNS_FORMAT_JSON
                                 : ALTRUNS_FORMAT_CSV;
    return true;
  });
}

altruns_status altruns_parse_method(const char* name, altruns_method* out) {
  return parse_into(name, out, [&](const char* s) {
    const auto m = parse_method(s);
    if (!m) return false;
    *out = static_cast<altruns_method>(static_cast<int>(*m));
    return true;
  });
}

altruns_status altruns_parse_suite(const char* name, altruns_suite* out) {
  return parse_into(name, out, [&](const char* s) {
    const auto su = parse_suite(s);
    if (!su) return false;
    *out = static_cast<altruns_suite>(static_cast<int>(*su));
    return true;
  });
}

altruns_session* altruns_session_create(void) { return new (std::nothrow) altruns_session(); }

void altruns_session_destroy(altruns_session* session) { delete session; }

const char* altruns_session_output(const altruns_session* session) {
  return session ? session->output.c_str() : "";
}

const char* altruns_session_error(const altruns_session* session) {
  return session ? session->error.c_str() : "null session";
}

altruns_status altruns_table(altruns_session* session, int n_max, altruns_format format) {
  return guarded(session, [&] { return cmd_table(n_max, to_format(format)); });
}

altruns_status altruns_count(altruns_session* session, int n, int s, altruns_method method,
                             uint64_t budget, altruns_format format) {
  return guarded(session,
                 [&] { return cmd_count(n, s, to_method(method), to_format(format), budget); });
}

altruns_status altruns_formula(altruns_session* session, int s, altruns_format format) {
  return guarded(session, [&] { return cmd_formula(s, to_format(format)); });
}

altruns_status altruns_gf(altruns_session* session, int s, altruns_format format) {
  return guarded(session, [&] { return cmd_gf(s, to_format(format)); });
}

altruns_status altruns_pfd(altruns_session* session, int s, altruns_format format) {
  return guarded(session, [&] { return cmd_pfd(s, to_format(format)); });
}

altruns_status altruns_census(altruns_session* session, int n_lo, int n_hi, int s_lo, int s_hi,
                              uint64_t budget, altruns_format format) {
  return guarded(session, [&] {
    return cmd_census(n_lo, n_hi, s_lo, s_hi, to_format(format), budget);
  });
}

altruns_status altruns_trace(altruns_session* session, int n, int num_parts,
                             const int* part_of_value, altruns_format format) {
  return guarded(session, [&] {
    if (n < 1 || n > kMaxGroundSetSize)
      throw DomainError("n must satisfy 1 <= n <= " + std::to_string(kMaxGroundSetSize));
    if (num_parts < 1) throw DomainError("a T-tuple needs at least one part");
    if (part_of_value == nullptr) throw DomainError("null part assignment");
    TTuple t{n, std::vector<Subset>(static_cast<std::size_t>(num_parts))};
    for (int v = 1; v <= n; ++v) {
      const int p = part_of_value[v - 1];
      if (p < 1 || p > num_parts)
        throw DomainError("value " + std::to_string(v) + " assigned to missing part " +
                          std::to_string(p));
      t.sets[static_cast<std::size_t>(p - 1)].insert(v);
    }
    return cmd_trace(t, to_format(format));
  });
}

altruns_status altruns_verify(altruns_session* session, altruns_suite suite,
                              altruns_format format) {
  return guarded(session, [&] { return cmd_verify(to_suite(suite), to_format(format)); });
}

altruns_status altruns_triangle_create(altruns_session* session, int n_max,
                                       altruns_triangle** out) {
  if (out == nullptr) return ALTRUNS_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(session, [&] {
    if (n_max < 2 || n_max > kTableMaxN)
      throw DomainError("n-max must satisfy 2 <= n-max <= " + std::to_string(kTableMaxN));
    const RunTriangle t = andre_triangle(n_max);
    auto* h = new altruns_triangle();
    h->n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
      std::vector<std::string> row;
      for (const auto& v : t.row(n)) row.push_back(to_string(v));
      h->rows.push_back(std::move(row));
    }
    *out = h;
    return CommandOutput{};
  });
}

void altruns_triangle_destroy(altruns_triangle* triangle) { delete triangle; }

int altruns_triangle_n_max(const altruns_triangle* triangle) {
  return triangle ? triangle->n_max : 0;
}

const char* altruns_triangle_value(const altruns_triangle* triangle, int n, int s) {
  if (triangle == nullptr || n < 2 || n > triangle->n_max) return nullptr;
  const auto& row = triangle->rows[static_cast<std::size_t>(n - 2)];
  if (s < 1 || s > static_cast<int>(row.size())) return "0";
  return row[static_cast<std::size_t>(s - 1)].c_str();
}

}  // extern "C"
