#include "ontomatch/score_matrix.hpp"

#include <algorithm>

namespace ontomatch {

ScoreMatrix build_matrix(const std::vector<Entity>& source, const std::vector<Entity>& target,
                         const EngineConfig& config, const LexicalResource& lexicon) {
  for (const Entity& entity : source) {
    if (entity.kind != source.front().kind) {
      throw KindMismatch("source entities mix kinds");
    }
  }
  for (const Entity& entity : target) {
    if (entity.kind != target.front().kind) {
      throw KindMismatch("target entities mix kinds");
    }
  }
  if (!source.empty() && !target.empty() && source.front().kind != target.front().kind) {
    throw KindMismatch(std::string("cannot score ") + std::string(to_string(source.front().kind)) +
                       " entities against " + std::string(to_string(target.front().kind)) +
                       " entities");
  }

  ScoreMatrix matrix;
  matrix.metric = config.metric;
  matrix.kind = !source.empty()   ? source.front().kind
                : !target.empty() ? target.front().kind
                                  : EntityKind::Class;

  std::vector<std::string> source_names;
  std::vector<std::string> target_names;
  source_names.reserve(source.size());
  target_names.reserve(target.size());
  for (const Entity& entity : source) {
    matrix.rows.push_back(entity.iri);
    source_names.push_back(display_name(entity));
  }
  for (const Entity& entity : target) {
    matrix.cols.push_back(entity.iri);
    target_names.push_back(display_name(entity));
  }

  matrix.cells.assign(source.size(), std::vector<double>(target.size(), 0.0));
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      double score = similarity(config.metric, source_names[i], target_names[j]);
      if (score < config.semantic_trigger) {
        score = std::max(score, lexicon.semantic_score(source_names[i], target_names[j]));
      }
      matrix.cells[i][j] = score;
    }
  }
  return matrix;
}

std::vector<ScoreMatrix> build_all_blocks(const Ontology& source, const Ontology& target,
                                          const EngineConfig& config,
                                          const LexicalResource& lexicon) {
  std::vector<ScoreMatrix> blocks;
  for (EntityKind kind : {EntityKind::Class, EntityKind::Property, EntityKind::Instance}) {
    std::vector<Entity> src = entities_by_kind(source, kind);
    std::vector<Entity> tgt = entities_by_kind(target, kind);
    if (src.empty() || tgt.empty()) continue;
    blocks.push_back(build_matrix(src, tgt, config, lexicon));
  }
  return blocks;
}

}  // namespace ontomatch
