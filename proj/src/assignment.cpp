#include "ontomatch/assignment.hpp"

#include <algorithm>
#include <limits>

namespace ontomatch {

namespace {

// Minimizing Kuhn-Munkres on a square cost matrix via shortest augmenting
// paths with dual potentials, O(n^3). Rows are introduced in order, so ties
// resolve deterministically. Returns match[column] = row.
std::vector<std::size_t> solve_square_min(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double kInf = std::numeric_limits<double>::max() / 4.0;

  // 1-based with column 0 as the staging slot for the row being inserted.
  std::vector<double> row_potential(n + 1, 0.0);
  std::vector<double> col_potential(n + 1, 0.0);
  std::vector<std::size_t> matched_row(n + 1, 0);
  std::vector<std::size_t> path(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    matched_row[0] = row;
    std::size_t j0 = 0;
    std::vector<double> min_reduced(n + 1, kInf);
    std::vector<bool> visited(n + 1, false);
    do {
      visited[j0] = true;
      std::size_t i0 = matched_row[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        double reduced = cost[i0 - 1][j - 1] - row_potential[i0] - col_potential[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          path[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (visited[j]) {
          row_potential[matched_row[j]] += delta;
          col_potential[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (matched_row[j0] != 0);

    // Augment along the alternating path back to the staging column.
    do {
      std::size_t j1 = path[j0];
      matched_row[j0] = matched_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> match(n, 0);
  for (std::size_t j = 1; j <= n; ++j) match[j - 1] = matched_row[j] - 1;
  return match;
}

}  // namespace

Assignment kuhn_munkres(const ScoreMatrix& matrix) {
  const std::size_t m = matrix.row_count();
  const std::size_t n = matrix.col_count();
  if (m == 0 || n == 0) {
    throw EmptyMatrix("cannot assign on a matrix with an empty side");
  }

  // Square up with zero-score padding, then flip maximization into
  // minimization with cost = max cell - score.
  const std::size_t size = std::max(m, n);
  double max_cell = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) max_cell = std::max(max_cell, matrix.at(i, j));
  }
  std::vector<std::vector<double>> cost(size, std::vector<double>(size, max_cell));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = max_cell - matrix.at(i, j);
  }

  std::vector<std::size_t> match = solve_square_min(cost);

  Assignment assignment;
  for (std::size_t j = 0; j < size; ++j) {
    std::size_t i = match[j];
    if (i < m && j < n) assignment.pairs.emplace_back(i, j);
  }
  std::sort(assignment.pairs.begin(), assignment.pairs.end());
  for (const auto& [i, j] : assignment.pairs) assignment.total_weight += matrix.at(i, j);
  return assignment;
}

Assignment filter_assignment(const Assignment& assignment, const ScoreMatrix& matrix,
                             double threshold) {
  Assignment filtered;
  for (const auto& [i, j] : assignment.pairs) {
    if (matrix.at(i, j) >= threshold) {
      filtered.pairs.emplace_back(i, j);
      filtered.total_weight += matrix.at(i, j);
    }
  }
  return filtered;
}

}  // namespace ontomatch
