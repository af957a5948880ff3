#include "altruns/linear_system.hpp"

#include <utility>

#include "altruns/errors.hpp"

namespace altruns {

std::optional<std::vector<Rational>> solve_linear_system(RationalMatrix a,
                                                         std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw DomainError("ragged coefficient matrix");

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    std::swap(b[sel], b[pivot_row]);
    const Rational inv = 1 / a[pivot_row][col];
    for (std::size_t j = col; j < cols; ++j) a[pivot_row][j] *= inv;
    b[pivot_row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[pivot_row][j];
      b[r] -= f * b[pivot_row];
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }

  for (std::size_t r = pivot_row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  if (pivot_row < cols) throw DomainError("linear system is underdetermined");

  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivot_row; ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

}  // namespace altruns
