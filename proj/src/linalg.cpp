#include "qhforge/detail/linalg.hpp"

#include <cstddef>

namespace qhforge::detail {

LinearSolution solve_rational(RMat a, RVec b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  // Forward elimination with partial pivoting into reduced row echelon form
  // of the augmented matrix.
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);

  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    Rational inv = a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }

  LinearSolution sol;
  for (std::size_t i = row; i < m; ++i) {
    if (a[i][n] != 0) {
      sol.consistent = false;
      return sol;
    }
  }
  sol.consistent = true;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    is_pivot[static_cast<std::size_t>(pivot_col_of_row[r])] = true;
    sol.particular[static_cast<std::size_t>(pivot_col_of_row[r])] = a[r][n];
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    sol.free_columns.push_back(static_cast<int>(c));
    RVec basis(n, Rational(0));
    basis[c] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      basis[static_cast<std::size_t>(pivot_col_of_row[r])] = -a[r][c];
    sol.nullspace.push_back(std::move(basis));
  }
  return sol;
}

int rank_rational(RMat a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return static_cast<int>(row);
}

bool RowSpan::add(RVec v) {
  RVec r = reduce(std::move(v));
  int lead = -1;
  for (std::size_t i = 0; i < width_; ++i) {
    if (r[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  if (lead < 0) return false;
  Rational inv = r[static_cast<std::size_t>(lead)];
  for (auto& x : r) x /= inv;
  // Clear this column in existing rows to stay reduced.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational f = rows_[k][static_cast<std::size_t>(lead)];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) rows_[k][j] -= f * r[j];
  }
  // Insert keeping leads ascending.
  std::size_t pos = 0;
  while (pos < leads_.size() && leads_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

RVec RowSpan::reduce(RVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational f = v[static_cast<std::size_t>(leads_[k])];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) v[j] -= f * rows_[k][j];
  }
  return v;
}

bool RowSpan::contains(RVec v) const {
  RVec r = reduce(std::move(v));
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace qhforge::detail
