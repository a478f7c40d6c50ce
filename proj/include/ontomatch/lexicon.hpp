#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/errors.hpp"

namespace ontomatch {

inline constexpr double kSynonymScore = 0.9;
inline constexpr double kHypernymScore = 0.7;

/// File-backed synonym/hypernym resource. Lemmas are stored normalized
/// (normalize_label rules), the hypernym graph is a DAG, and all queries are
/// read-only after load.
class LexicalResource {
public:
  LexicalResource() = default;

  /// True iff some synset contains both lemmas.
  bool are_synonyms(std::string_view a, std::string_view b) const;

  /// True iff some synset of one lemma reaches some synset of the other via
  /// one or more hypernym edges, in either direction.
  bool is_hypernym_related(std::string_view a, std::string_view b) const;

  /// 0.9 for synonyms, 0.7 for hierarchy relations, 0.0 otherwise.
  double semantic_score(std::string_view a, std::string_view b) const;

  std::size_t synset_count() const { return synsets_.size(); }
  bool empty() const { return synsets_.empty(); }

  friend LexicalResource load_lexicon(std::string_view text);

private:
  std::vector<int> synsets_of(std::string_view lemma) const;
  bool reaches(int from, int to) const;

  std::vector<std::vector<std::string>> synsets_;
  std::vector<std::vector<int>> hypernyms_;  // synset index -> parent indices
  std::map<std::string, std::vector<int>, std::less<>> lemma_index_;
};

/// Parses the lexicon line format: `syn <id>: <lemma>[, <lemma>]*` and
/// `hyper <child-id> < <parent-id>`, '#' comments. Rejects unknown synset
/// references and any cycle (self-loops included) in the hypernym graph.
LexicalResource load_lexicon(std::string_view text);

}  // namespace ontomatch
