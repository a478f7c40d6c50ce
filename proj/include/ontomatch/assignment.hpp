#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ontomatch/score_matrix.hpp"

namespace ontomatch {

/// One-to-one pairing of matrix rows to columns. Row and column indices are
/// each unique across the pairs; total_weight is the sum of the matched cell
/// scores.
struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted by row
  double total_weight = 0.0;
};

/// Maximum-total-weight matching of size min(m, n) via the Kuhn-Munkres
/// algorithm. Rectangular matrices are squared by zero-padding; padded pairs
/// never appear in the result. Throws EmptyMatrix when either side is empty.
Assignment kuhn_munkres(const ScoreMatrix& matrix);

/// Keeps only pairs whose cell score is >= threshold and recomputes the
/// total. Idempotent for a fixed threshold.
Assignment filter_assignment(const Assignment& assignment, const ScoreMatrix& matrix,
                             double threshold);

}  // namespace ontomatch
