#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "altruns/bijection.hpp"
#include "altruns/verify.hpp"

namespace altruns {

enum class Format { kText, kJson, kCsv };
enum class Method { kBrute, kRecurrence, kGenfun, kClosedForm, kCensus, kAll };

std::optional<Format> parse_format(std::string_view s);
std::optional<Method> parse_method(std::string_view s);
std::optional<Suite> parse_suite(std::string_view s);

inline constexpr int kTableMaxN = 200;
inline constexpr int kCountMaxN = 200;

// Rendered output of one command. `ok` is false when a check failed (the
// output is still complete). Argument errors throw DomainError/BudgetError.
struct CommandOutput {
  std::string text;
  bool ok = true;
};

CommandOutput cmd_table(int n_max, Format f);
CommandOutput cmd_count(int n, int s, Method m, Format f,
                        std::uint64_t budget = kDefaultCensusBudget);
CommandOutput cmd_formula(int s, Format f);
CommandOutput cmd_gf(int s, Format f);
CommandOutput cmd_pfd(int s, Format f);
CommandOutput cmd_census(int n_lo, int n_hi, int s_lo, int s_hi, Format f,
                         std::uint64_t budget = kDefaultCensusBudget);
CommandOutput cmd_trace(const TTuple& t, Format f);
CommandOutput cmd_verify(Suite suite, Format f);

}  // namespace altruns
