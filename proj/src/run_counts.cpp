#include "altruns/run_counts.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>
#include <utility>

#include "altruns/errors.hpp"

namespace altruns {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) throw DomainError("empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

int count_runs(std::span<const int> values) {
  if (values.size() < 2) throw DomainError("runs undefined below n=2");
  int runs = 1;
  bool up = values[1] > values[0];
  for (std::size_t i = 2; i < values.size(); ++i) {
    const bool step_up = values[i] > values[i - 1];
    if (step_up != up) {
      ++runs;
      up = step_up;
    }
  }
  return runs;
}

int count_runs(const Permutation& p) { return count_runs(p.values()); }

bool first_run_up(const Permutation& p) {
  if (p.size() < 2) throw DomainError("runs undefined below n=2");
  return p[1] > p[0];
}

namespace {

void check_brute_force_n(int n) {
  if (n < 2 || n > kBruteForceMaxN)
    throw DomainError("brute force requires 2 <= n <= " + std::to_string(kBruteForceMaxN));
}

// Tallies run counts over all permutations with the given first value.
std::vector<std::uint64_t> tally_with_first(int n, int first, bool only_first_up) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::vector<int> perm;
  perm.reserve(n);
  perm.push_back(first);
  for (int v = 1; v <= n; ++v)
    if (v != first) perm.push_back(v);
  do {
    if (only_first_up && perm[1] < perm[0]) continue;
    ++counts[static_cast<std::size_t>(count_runs(std::span<const int>(perm)))];
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return counts;
}

RunRow brute_force(int n, bool only_first_up) {
  check_brute_force_n(n);
  std::vector<std::future<std::vector<std::uint64_t>>> parts;
  parts.reserve(n);
  for (int first = 1; first <= n; ++first)
    parts.push_back(std::async(std::launch::async, tally_with_first, n, first, only_first_up));
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n), 0);
  for (auto& f : parts) {
    const auto part = f.get();
    for (std::size_t s = 0; s < total.size(); ++s) total[s] += part[s];
  }
  RunRow row;
  row.reserve(n - 1);
  for (int s = 1; s <= n - 1; ++s) {
    BigInt v;
    mpz_set_ui(v.get_mpz_t(), static_cast<unsigned long>(total[s]));
    row.push_back(v);
  }
  return row;
}

}  // namespace

RunRow brute_force_row(int n) { return brute_force(n, false); }

RunRow brute_force_row_first_up(int n) { return brute_force(n, true); }

RunRow andre_base_row() { return {BigInt(2)}; }

RunRow andre_row(int n, const RunRow& prev) {
  if (n < 2) throw DomainError("P(n,s) undefined below n=2");
  if (n == 2) return andre_base_row();
  if (static_cast<int>(prev.size()) != n - 2)
    throw DomainError("andre_row: previous row must be row " + std::to_string(n - 1));
  auto p = [&](int s) -> BigInt {
    return (s >= 1 && s <= n - 2) ? prev[static_cast<std::size_t>(s - 1)] : BigInt(0);
  };
  RunRow row;
  row.reserve(n - 1);
  for (int s = 1; s <= n - 1; ++s) {
    BigInt v = s * p(s) + 2 * p(s - 1) + (n - s) * p(s - 2);
    row.push_back(std::move(v));
  }
  return row;
}

RunTriangle::RunTriangle(std::vector<RunRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1) throw DomainError("triangle row has wrong length");
}

const RunRow& RunTriangle::row(int n) const {
  if (n < 2 || n > n_max())
    throw DomainError("row " + std::to_string(n) + " not in triangle");
  return rows_[static_cast<std::size_t>(n - 2)];
}

BigInt RunTriangle::at(int n, int s) const {
  const RunRow& r = row(n);
  if (s < 1 || s > n - 1) return 0;
  return r[static_cast<std::size_t>(s - 1)];
}

RunTriangle andre_triangle(int n_max) {
  if (n_max < 2) throw DomainError("P(n,s) undefined below n=2");
  std::vector<RunRow> rows;
  rows.reserve(n_max - 1);
  rows.push_back(andre_base_row());
  for (int n = 3; n <= n_max; ++n) rows.push_back(andre_row(n, rows.back()));
  return RunTriangle(std::move(rows));
}

RunPolynomial run_polynomial(int n) {
  if (n < 2) throw DomainError("P(n,s) undefined below n=2");
  Polynomial p = Polynomial::from_integers({0, 2});
  const Polynomial x_minus_x3 = Polynomial::from_integers({0, 1, 0, -1});
  for (int m = 3; m <= n; ++m) {
    const Polynomial mult = Polynomial::from_integers({0, 2, m - 2});
    p = x_minus_x3 * p.derivative() + mult * p;
  }
  return {n, std::move(p)};
}

bool log_concavity_check(const RunRow& row) {
  for (std::size_t s = 1; s + 1 < row.size(); ++s)
    if (row[s] * row[s] < row[s - 1] * row[s + 1]) return false;
  return true;
}

}  // namespace altruns
