#include "polyharm/linsolve.hpp"

namespace polyharm {

LinearSolution solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("right-hand side size mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw DomainError("ragged matrix");

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k < cols; ++k) a[row][k] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(c);
    ++row;
  }

  LinearSolution out;
  out.rank = static_cast<int>(row);
  out.unknowns = static_cast<int>(cols);
  for (std::size_t r = row; r < rows; ++r)
    if (b[r] != 0) return out;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  out.solution = std::move(x);
  return out;
}

}  // namespace polyharm
