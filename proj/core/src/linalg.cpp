#include "flagchow/linalg.hpp"

#include <algorithm>

namespace flagchow {

std::vector<int> rref(RatMatrix& matrix) {
  std::vector<int> pivots;
  if (matrix.empty()) return pivots;
  std::size_t cols = matrix[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < matrix.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < matrix.size() && matrix[pivot_row][col] == 0) {
      ++pivot_row;
    }
    if (pivot_row == matrix.size()) continue;
    std::swap(matrix[rank], matrix[pivot_row]);
    Rational inv = matrix[rank][col];
    for (auto& entry : matrix[rank]) entry /= inv;
    for (std::size_t row = 0; row < matrix.size(); ++row) {
      if (row == rank || matrix[row][col] == 0) continue;
      Rational factor = matrix[row][col];
      for (std::size_t j = col; j < cols; ++j) {
        matrix[row][j] -= factor * matrix[rank][j];
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  matrix.resize(rank);
  return pivots;
}

RatRow reduce_against(const RatMatrix& basis, const std::vector<int>& pivots,
                      RatRow row) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational factor = row[pivots[i]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] -= factor * basis[i][j];
    }
  }
  return row;
}

namespace {

std::optional<RatRow> solve_impl(const std::vector<RatRow>& columns,
                                 const RatRow& target, bool require_unique) {
  std::size_t unknowns = columns.size();
  std::size_t rows = target.size();
  RatMatrix augmented(rows, RatRow(unknowns + 1, Rational(0)));
  for (std::size_t j = 0; j < unknowns; ++j) {
    if (columns[j].size() != rows) throw Error("column size mismatch");
    for (std::size_t i = 0; i < rows; ++i) augmented[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < rows; ++i) augmented[i][unknowns] = target[i];
  std::vector<int> pivots = rref(augmented);
  RatRow solution(unknowns, Rational(0));
  std::vector<bool> pivot_col(unknowns, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == static_cast<int>(unknowns)) return std::nullopt;  // 0 = 1
    pivot_col[pivots[i]] = true;
  }
  // With free unknowns pinned to zero, a pivot row's solution entry is just
  // the augmented column entry.
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    solution[pivots[i]] = augmented[i][unknowns];
  }
  if (require_unique) {
    for (std::size_t j = 0; j < unknowns; ++j) {
      if (!pivot_col[j]) return std::nullopt;
    }
  }
  return solution;
}

}  // namespace

std::optional<RatRow> solve_unique(const std::vector<RatRow>& columns,
                                   const RatRow& target) {
  return solve_impl(columns, target, true);
}

std::optional<RatRow> solve_any(const std::vector<RatRow>& columns,
                                const RatRow& target) {
  return solve_impl(columns, target, false);
}

RatMatrix kernel_basis(const std::vector<RatRow>& columns) {
  std::size_t unknowns = columns.size();
  if (unknowns == 0) return {};
  std::size_t rows = columns[0].size();
  RatMatrix matrix(rows, RatRow(unknowns, Rational(0)));
  for (std::size_t j = 0; j < unknowns; ++j) {
    for (std::size_t i = 0; i < rows; ++i) matrix[i][j] = columns[j][i];
  }
  std::vector<int> pivots = rref(matrix);
  std::vector<bool> is_pivot(unknowns, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMatrix kernel;
  for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatRow vec(unknowns, Rational(0));
    vec[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      vec[pivots[i]] = -matrix[i][free_col];
    }
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

}  // namespace flagchow
