#pragma once

#include <span>
#include <vector>

#include "altruns/polynomial.hpp"
#include "altruns/rational.hpp"

namespace altruns {

// A rearrangement of 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }
  int operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Number of maximal monotone intervals. Requires n >= 2.
int count_runs(const Permutation& p);
int count_runs(std::span<const int> values);
bool first_run_up(const Permutation& p);

// Row of P(n, s) for s = 1..n-1; element [s-1] holds P(n, s).
using RunRow = std::vector<BigInt>;

inline constexpr int kBruteForceMaxN = 10;

// Exhaustive enumeration of all n! permutations, 2 <= n <= kBruteForceMaxN.
RunRow brute_force_row(int n);
// Same, counting only permutations whose first run is up.
RunRow brute_force_row_first_up(int n);

// P(n, s) = s P(n-1, s) + 2 P(n-1, s-1) + (n-s) P(n-1, s-2), out-of-range
// entries read as zero. `prev` must be row n-1.
RunRow andre_row(int n, const RunRow& prev);
RunRow andre_base_row();  // P(2, s) = 2 delta_{s,1}

class RunTriangle {
 public:
  RunTriangle() = default;
  explicit RunTriangle(std::vector<RunRow> rows);  // rows for n = 2, 3, ...

  int n_max() const { return static_cast<int>(rows_.size()) + 1; }
  const RunRow& row(int n) const;
  // Zero outside 1 <= s <= n-1.
  BigInt at(int n, int s) const;

 private:
  std::vector<RunRow> rows_;
};

RunTriangle andre_triangle(int n_max);

struct RunPolynomial {
  int n;
  Polynomial poly;  // [x^s] = P(n, s)
};

// P_n(x) = (x - x^3) P'_{n-1}(x) + ((n-2) x^2 + 2x) P_{n-1}(x), P_2 = 2x.
RunPolynomial run_polynomial(int n);

// P(n,s)^2 >= P(n,s-1) P(n,s+1) for every interior s.
bool log_concavity_check(const RunRow& row);

}  // namespace altruns
