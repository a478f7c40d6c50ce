#include "ontomatch/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "ontomatch/ontology.hpp"

namespace ontomatch {

std::vector<int> LexicalResource::synsets_of(std::string_view lemma) const {
  auto it = lemma_index_.find(lemma);
  if (it == lemma_index_.end()) return {};
  return it->second;
}

bool LexicalResource::are_synonyms(std::string_view a, std::string_view b) const {
  std::vector<int> sa = synsets_of(a);
  if (sa.empty()) return false;
  std::vector<int> sb = synsets_of(b);
  for (int i : sa) {
    if (std::find(sb.begin(), sb.end(), i) != sb.end()) return true;
  }
  return false;
}

bool LexicalResource::reaches(int from, int to) const {
  std::vector<int> stack{from};
  std::vector<bool> seen(synsets_.size(), false);
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (int parent : hypernyms_[static_cast<std::size_t>(node)]) {
      if (parent == to) return true;
      if (!seen[static_cast<std::size_t>(parent)]) {
        seen[static_cast<std::size_t>(parent)] = true;
        stack.push_back(parent);
      }
    }
  }
  return false;
}

bool LexicalResource::is_hypernym_related(std::string_view a, std::string_view b) const {
  std::vector<int> sa = synsets_of(a);
  std::vector<int> sb = synsets_of(b);
  for (int i : sa) {
    for (int j : sb) {
      if (reaches(i, j) || reaches(j, i)) return true;
    }
  }
  return false;
}

double LexicalResource::semantic_score(std::string_view a, std::string_view b) const {
  if (are_synonyms(a, b)) return kSynonymScore;
  if (is_hypernym_related(a, b)) return kHypernymScore;
  return 0.0;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LexicalResource load_lexicon(std::string_view text) {
  LexicalResource resource;
  std::map<std::string, int> id_to_index;
  struct PendingEdge {
    std::string child;
    std::string parent;
    int line;
  };
  std::vector<PendingEdge> pending;

  std::istringstream stream{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    std::string_view line = raw_line;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("syn ") || line == "syn") {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw SyntaxError("expected: syn <id>: <lemma>[, <lemma>]*", line_no);
      }
      std::string id{trim(line.substr(4, colon - 4))};
      if (id.empty() || id.find(' ') != std::string::npos) {
        throw SyntaxError("bad synset id", line_no);
      }
      if (id_to_index.count(id) > 0) {
        throw SyntaxError("duplicate synset id '" + id + "'", line_no);
      }

      std::vector<std::string> lemmas;
      std::string_view rest = line.substr(colon + 1);
      while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view piece = comma == std::string_view::npos ? rest : rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        std::string lemma = normalize_label(trim(piece));
        if (lemma.empty()) throw SyntaxError("empty lemma", line_no);
        lemmas.push_back(std::move(lemma));
      }
      if (lemmas.empty()) throw SyntaxError("synset with no lemmas", line_no);

      int index = static_cast<int>(resource.synsets_.size());
      id_to_index.emplace(id, index);
      for (const std::string& lemma : lemmas) {
        auto& entries = resource.lemma_index_[lemma];
        if (std::find(entries.begin(), entries.end(), index) == entries.end()) {
          entries.push_back(index);
        }
      }
      resource.synsets_.push_back(std::move(lemmas));
      resource.hypernyms_.emplace_back();
    } else if (line.starts_with("hyper ") || line == "hyper") {
      std::istringstream parts{std::string(line.substr(5))};
      std::string child, angle, parent, extra;
      parts >> child >> angle >> parent;
      if (child.empty() || angle != "<" || parent.empty() || (parts >> extra)) {
        throw SyntaxError("expected: hyper <child-id> < <parent-id>", line_no);
      }
      pending.push_back(PendingEdge{std::move(child), std::move(parent), line_no});
    } else {
      throw SyntaxError("unknown declaration", line_no);
    }
  }

  for (const PendingEdge& edge : pending) {
    auto child = id_to_index.find(edge.child);
    if (child == id_to_index.end()) {
      throw UnknownSynset("line " + std::to_string(edge.line) + ": unknown synset '" +
                          edge.child + "'");
    }
    auto parent = id_to_index.find(edge.parent);
    if (parent == id_to_index.end()) {
      throw UnknownSynset("line " + std::to_string(edge.line) + ": unknown synset '" +
                          edge.parent + "'");
    }
    if (child->second == parent->second) {
      throw CyclicHierarchy("line " + std::to_string(edge.line) + ": synset '" + edge.child +
                            "' cannot be its own hypernym");
    }
    auto& parents = resource.hypernyms_[static_cast<std::size_t>(child->second)];
    if (std::find(parents.begin(), parents.end(), parent->second) == parents.end()) {
      parents.push_back(parent->second);
    }
  }

  // Reject any directed cycle with a three-state depth-first walk.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> marks(resource.synsets_.size(), Mark::White);
  auto visit = [&](auto&& self, int node) -> void {
    marks[static_cast<std::size_t>(node)] = Mark::Grey;
    for (int parent : resource.hypernyms_[static_cast<std::size_t>(node)]) {
      Mark mark = marks[static_cast<std::size_t>(parent)];
      if (mark == Mark::Grey) {
        throw CyclicHierarchy("hypernym edges form a cycle through synset index " +
                              std::to_string(parent));
      }
      if (mark == Mark::White) self(self, parent);
    }
    marks[static_cast<std::size_t>(node)] = Mark::Black;
  };
  for (std::size_t i = 0; i < resource.synsets_.size(); ++i) {
    if (marks[i] == Mark::White) visit(visit, static_cast<int>(i));
  }

  return resource;
}

}  // namespace ontomatch
