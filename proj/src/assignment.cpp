#include "sfperm/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sfperm/errors.hpp"

namespace sfperm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Finds an alternating path in the equality graph from `row` to `target`
// column. Columns held by fixed rows and `banned` are skipped. On success the
// matching is rewritten along the path.
bool reroute(int row, int target, int banned, int first_free_row, int n,
             const std::vector<char>& tight, std::vector<int>& row_to_col,
             std::vector<int>& col_to_row, std::vector<char>& visited) {
  for (int col = 0; col < n; ++col) {
    if (col == banned || visited[static_cast<std::size_t>(col)]) continue;
    if (!tight[static_cast<std::size_t>(row) * n + col]) continue;
    const int holder = col_to_row[static_cast<std::size_t>(col)];
    if (col != target && holder < first_free_row) continue;
    visited[static_cast<std::size_t>(col)] = 1;
    if (col == target ||
        reroute(holder, target, banned, first_free_row, n, tight, row_to_col, col_to_row, visited)) {
      row_to_col[static_cast<std::size_t>(row)] = col;
      col_to_row[static_cast<std::size_t>(col)] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

Assignment solve_min_assignment(std::span<const double> cost, int n) {
  if (n < 1) throw ValidationError("assignment matrix must be at least 1x1");
  if (cost.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ValidationError("assignment matrix has " + std::to_string(cost.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  double lo = kInf;
  double hi = -kInf;
  for (double c : cost) {
    if (!std::isfinite(c)) throw ValidationError("assignment matrix has a non-finite entry");
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  const auto at = [&](int r, int c) {
    // Shifted to be non-negative; a common shift leaves the argmin unchanged.
    return cost[static_cast<std::size_t>(r) * n + c] - lo;
  };

  // Dual potentials, 1-based with slot 0 as the virtual source column.
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  for (int r = 0; r < n; ++r) {
    double m = kInf;
    for (int c = 0; c < n; ++c) m = std::min(m, at(r, c));
    u[static_cast<std::size_t>(r) + 1] = m;
  }
  for (int c = 0; c < n; ++c) {
    double m = kInf;
    for (int r = 0; r < n; ++r) m = std::min(m, at(r, c) - u[static_cast<std::size_t>(r) + 1]);
    v[static_cast<std::size_t>(c) + 1] = m;
  }

  std::vector<int> col_owner(static_cast<std::size_t>(n) + 1, 0);  // col -> row (1-based)
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
  std::vector<double> minv(static_cast<std::size_t>(n) + 1);
  std::vector<char> used(static_cast<std::size_t>(n) + 1);
  for (int row = 1; row <= n; ++row) {
    col_owner[0] = row;
    int col0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[static_cast<std::size_t>(col0)] = 1;
      const int row0 = col_owner[static_cast<std::size_t>(col0)];
      double delta = kInf;
      int col1 = 0;
      for (int col = 1; col <= n; ++col) {
        if (used[static_cast<std::size_t>(col)]) continue;
        const double reduced = at(row0 - 1, col - 1) - u[static_cast<std::size_t>(row0)] -
                               v[static_cast<std::size_t>(col)];
        if (reduced < minv[static_cast<std::size_t>(col)]) {
          minv[static_cast<std::size_t>(col)] = reduced;
          way[static_cast<std::size_t>(col)] = col0;
        }
        if (minv[static_cast<std::size_t>(col)] < delta) {
          delta = minv[static_cast<std::size_t>(col)];
          col1 = col;
        }
      }
      for (int col = 0; col <= n; ++col) {
        if (used[static_cast<std::size_t>(col)]) {
          u[static_cast<std::size_t>(col_owner[static_cast<std::size_t>(col)])] += delta;
          v[static_cast<std::size_t>(col)] -= delta;
        } else {
          minv[static_cast<std::size_t>(col)] -= delta;
        }
      }
      col0 = col1;
    } while (col_owner[static_cast<std::size_t>(col0)] != 0);
    do {
      const int col1 = way[static_cast<std::size_t>(col0)];
      col_owner[static_cast<std::size_t>(col0)] = col_owner[static_cast<std::size_t>(col1)];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<int> row_to_col(static_cast<std::size_t>(n));
  std::vector<int> col_to_row(static_cast<std::size_t>(n));
  for (int col = 1; col <= n; ++col) {
    const int row = col_owner[static_cast<std::size_t>(col)] - 1;
    row_to_col[static_cast<std::size_t>(row)] = col - 1;
    col_to_row[static_cast<std::size_t>(col) - 1] = row;
  }

  // Every optimal assignment lives on the zero reduced-cost edges, so the
  // lexicographically smallest optimum is found greedily on that graph.
  const double scale = std::max(1.0, hi - lo);
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * scale * n;
  std::vector<char> tight(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  bool has_alternatives = false;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double reduced =
          at(r, c) - u[static_cast<std::size_t>(r) + 1] - v[static_cast<std::size_t>(c) + 1];
      const bool is_tight = std::abs(reduced) <= tol;
      tight[static_cast<std::size_t>(r) * n + c] = is_tight;
      if (is_tight && row_to_col[static_cast<std::size_t>(r)] != c) has_alternatives = true;
    }
  }
  if (has_alternatives) {
    std::vector<char> visited(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      const int current = row_to_col[static_cast<std::size_t>(r)];
      for (int c = 0; c < current; ++c) {
        if (!tight[static_cast<std::size_t>(r) * n + c]) continue;
        const int holder = col_to_row[static_cast<std::size_t>(c)];
        if (holder < r) continue;
        std::fill(visited.begin(), visited.end(), 0);
        visited[static_cast<std::size_t>(c)] = 1;
        if (reroute(holder, current, c, r + 1, n, tight, row_to_col, col_to_row, visited)) {
          row_to_col[static_cast<std::size_t>(r)] = c;
          col_to_row[static_cast<std::size_t>(c)] = r;
          break;
        }
      }
    }
  }

  Assignment result;
  result.row_to_col = std::move(row_to_col);
  for (int r = 0; r < n; ++r) {
    result.cost += cost[static_cast<std::size_t>(r) * n + result.row_to_col[static_cast<std::size_t>(r)]];
  }
  return result;
}

}  // namespace sfperm
