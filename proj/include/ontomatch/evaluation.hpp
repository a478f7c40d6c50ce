#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ontomatch/alignment.hpp"

namespace ontomatch {

struct EvalReport {
  std::size_t correct = 0;
  std::size_t system_total = 0;
  std::size_t reference_total = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

/// Counts system cells whose (entity1, entity2) pair occurs in the
/// reference; measures and relations are ignored. Zero denominators yield
/// zero scores so the function is total.
EvalReport evaluate(const Alignment& system, const Alignment& reference);

struct BatchEntry {
  std::string system_path;
  std::string reference_path;
  std::string label;
};

struct BatchRow {
  std::string label;
  EvalReport report;
};

struct BatchReport {
  std::vector<BatchRow> rows;

  /// Aligned-column table with a header, scores to six decimal places.
  std::string table() const;
  /// One label\tP\tR\tF line per row.
  std::string tsv() const;
};

/// Parses each (system, reference) file pair and evaluates it. Parse errors
/// are rethrown with the offending path in the message.
BatchReport batch_evaluate(const std::vector<BatchEntry>& entries);

}  // namespace ontomatch
