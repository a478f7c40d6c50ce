#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ontomatch/lexicon.hpp"
#include "ontomatch/ontology.hpp"
#include "ontomatch/string_metrics.hpp"

namespace ontomatch {

/// Pairwise similarity scores between the source entities (rows) and target
/// entities (columns) of one kind.
struct ScoreMatrix {
  std::vector<std::string> rows;  // source entity IRIs, input order
  std::vector<std::string> cols;  // target entity IRIs, input order
  std::vector<std::vector<double>> cells;
  EntityKind kind = EntityKind::Class;
  MetricId metric = MetricId::Levenshtein;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return cols.size(); }
  double at(std::size_t i, std::size_t j) const { return cells[i][j]; }
};

struct EngineConfig {
  MetricId metric = MetricId::Levenshtein;
  /// String scores below this consult the lexical resource; the cell becomes
  /// max(string score, semantic score).
  double semantic_trigger = 0.8;
  /// Assignment pairs scoring below this are dropped from the alignment.
  double acceptance_threshold = 0.5;
};

/// Scores every source/target pair on their display names. Both sides must
/// hold entities of one common kind.
ScoreMatrix build_matrix(const std::vector<Entity>& source, const std::vector<Entity>& target,
                         const EngineConfig& config, const LexicalResource& lexicon);

/// One matrix per entity kind present on both sides; kinds with an empty
/// side are omitted.
std::vector<ScoreMatrix> build_all_blocks(const Ontology& source, const Ontology& target,
                                          const EngineConfig& config,
                                          const LexicalResource& lexicon);

}  // namespace ontomatch
