#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontomatch/assignment.hpp"
#include "ontomatch/score_matrix.hpp"

namespace ontomatch {

/// One matched entity pair: ordinal id, the two IRIs, the relation (always
/// "=" here) and a confidence in [0,1].
struct Correspondence {
  int id = 0;
  std::string entity1;
  std::string entity2;
  std::string relation = "=";
  double measure = 0.0;

  bool operator==(const Correspondence&) const = default;
};

struct Alignment {
  std::string onto1;
  std::string onto2;
  std::string level = "0";
  std::string type_code = "11";
  std::vector<Correspondence> cells;

  bool operator==(const Alignment&) const = default;
};

/// Turns retained assignment pairs into correspondences, sorts them by
/// (entity1, entity2) and numbers them from 1.
Alignment assemble_alignment(const std::vector<std::pair<ScoreMatrix, Assignment>>& blocks,
                             const std::string& onto1, const std::string& onto2);

/// Deterministic RDF serialization: identical alignments produce
/// byte-identical documents. Measures keep at least one decimal digit and
/// survive a parse round trip exactly.
std::string serialize_alignment(const Alignment& alignment);

/// Reads the same dialect back. Throws MalformedXml for broken documents and
/// MissingField for cells lacking entity1/entity2/measure/relation.
Alignment parse_alignment(std::string_view document);

}  // namespace ontomatch
