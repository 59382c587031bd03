#pragma once

#include <span>
#include <vector>

namespace sfperm {

/// Result of a square minimum-cost assignment.
struct Assignment {
  std::vector<int> row_to_col;
  double cost = 0.0;
};

/// Minimum-cost perfect assignment of an n x n row-major cost matrix by the
/// Hungarian method, O(n^3).
///
/// The solver starts from the row- and column-reduced matrix and grows the
/// assignment one row at a time along shortest alternating paths; each dual
/// update is the "subtract the smallest uncovered entry, add it where lines
/// cross" step of the line-covering formulation. Among optimal assignments
/// the lexicographically smallest row_to_col is returned (ties are judged
/// on the final reduced costs with a tolerance scaled to the matrix range).
Assignment solve_min_assignment(std::span<const double> cost, int n);

}  // namespace sfperm
