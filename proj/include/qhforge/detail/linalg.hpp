#pragma once

#include <vector>

#include "qhforge/rational.hpp"

namespace qhforge::detail {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

// Result of solving A x = b over the rationals by row reduction.
// particular has every free variable set to 0; nullspace holds one basis
// vector per free column, with a 1 in that column and 0 in the other free
// columns, so integer solutions correspond exactly to integer assignments of
// the free variables.
struct LinearSolution {
  bool consistent = false;
  RVec particular;
  std::vector<int> free_columns;
  RMat nullspace;
};

LinearSolution solve_rational(RMat a, RVec b);

int rank_rational(RMat a);

// Incremental row-echelon span over Q with exact arithmetic. Rows are kept
// normalized (pivot 1, pivots cleared above and below).
class RowSpan {
 public:
  explicit RowSpan(std::size_t width) : width_(width) {}

  // Reduces v against the span; if a nonzero remainder survives it is added
  // (normalized) and true is returned.
  bool add(RVec v);

  // Remainder of v after reduction against the span.
  RVec reduce(RVec v) const;

  bool contains(RVec v) const;

  std::size_t dimension() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<RVec>& rows() const { return rows_; }
  const std::vector<int>& leads() const { return leads_; }

 private:
  std::size_t width_;
  std::vector<RVec> rows_;
  std::vector<int> leads_;
};

}  // namespace qhforge::detail
