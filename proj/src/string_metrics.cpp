#include "ontomatch/string_metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ontomatch {

std::optional<MetricId> metric_from_name(std::string_view name) {
  if (name == "levenshtein") return MetricId::Levenshtein;
  if (name == "qgram") return MetricId::QGram;
  if (name == "smith-waterman") return MetricId::SmithWaterman;
  if (name == "jaccard") return MetricId::Jaccard;
  return std::nullopt;
}

std::string_view metric_name(MetricId id) {
  switch (id) {
    case MetricId::Levenshtein: return "levenshtein";
    case MetricId::QGram: return "qgram";
    case MetricId::SmithWaterman: return "smith-waterman";
    case MetricId::Jaccard: return "jaccard";
  }
  return "unknown";
}

std::size_t edit_distance(std::string_view x, std::string_view y) {
  const std::size_t n = y.size();
  std::vector<std::size_t> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cur[0] = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t substitute = prev[j] + (x[i] == y[j] ? 0 : 1);
      cur[j + 1] = std::min({prev[j + 1] + 1, cur[j] + 1, substitute});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

double levenshtein_sim(std::string_view x, std::string_view y) {
  std::size_t longest = std::max(x.size(), y.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(x, y)) / static_cast<double>(longest);
}

namespace {

// Multiset of bigrams of the padded string, e.g. "car" -> bigrams of "#car#".
std::map<std::string, int> padded_bigrams(std::string_view s) {
  std::string padded;
  padded.reserve(s.size() + 2);
  padded.push_back(kQGramPad);
  padded.append(s);
  padded.push_back(kQGramPad);

  std::map<std::string, int> grams;
  for (std::size_t i = 0; i + kQGramSize <= padded.size(); ++i) {
    ++grams[padded.substr(i, kQGramSize)];
  }
  return grams;
}

std::set<std::string> bigram_set(std::string_view s) {
  std::set<std::string> grams;
  for (std::size_t i = 0; i + 2 <= s.size(); ++i) {
    grams.insert(std::string(s.substr(i, 2)));
  }
  return grams;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

template <typename Set>
double jaccard_of_sets(const Set& a, const Set& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t shared = 0;
  for (const auto& item : a) {
    if (b.count(item) > 0) ++shared;
  }
  std::size_t joint = a.size() + b.size() - shared;
  return static_cast<double>(shared) / static_cast<double>(joint);
}

}  // namespace

double qgram_sim(std::string_view x, std::string_view y) {
  std::map<std::string, int> gx = padded_bigrams(x);
  std::map<std::string, int> gy = padded_bigrams(y);

  std::size_t shared = 0;
  std::size_t total_x = 0;
  std::size_t total_y = 0;
  for (const auto& [gram, count] : gx) {
    total_x += static_cast<std::size_t>(count);
    auto it = gy.find(gram);
    if (it != gy.end()) shared += static_cast<std::size_t>(std::min(count, it->second));
  }
  for (const auto& [gram, count] : gy) total_y += static_cast<std::size_t>(count);

  return 2.0 * static_cast<double>(shared) / static_cast<double>(total_x + total_y);
}

double smith_waterman_sim(std::string_view x, std::string_view y) {
  if (x.empty() && y.empty()) return 1.0;
  if (x.empty() || y.empty()) return 0.0;

  const std::size_t n = y.size();
  std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
  int best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int diagonal = prev[j] + (x[i] == y[j] ? kSwMatch : kSwMismatch);
      int up = prev[j + 1] + kSwGap;
      int left = cur[j] + kSwGap;
      cur[j + 1] = std::max({0, diagonal, up, left});
      best = std::max(best, cur[j + 1]);
    }
    std::swap(prev, cur);
  }

  double ceiling = static_cast<double>(kSwMatch) * static_cast<double>(std::min(x.size(), y.size()));
  return static_cast<double>(best) / ceiling;
}

double jaccard_sim(std::string_view x, std::string_view y) {
  std::vector<std::string_view> tx = split_tokens(x);
  std::vector<std::string_view> ty = split_tokens(y);

  // Single-token labels carry no token structure to compare, so fall back to
  // character bigrams (unpadded).
  if (tx.size() == 1 && ty.size() == 1) {
    return jaccard_of_sets(bigram_set(x), bigram_set(y));
  }
  std::set<std::string_view> sx(tx.begin(), tx.end());
  std::set<std::string_view> sy(ty.begin(), ty.end());
  return jaccard_of_sets(sx, sy);
}

double similarity(MetricId metric, std::string_view x, std::string_view y) {
  switch (metric) {
    case MetricId::Levenshtein: return levenshtein_sim(x, y);
    case MetricId::QGram: return qgram_sim(x, y);
    case MetricId::SmithWaterman: return smith_waterman_sim(x, y);
    case MetricId::Jaccard: return jaccard_sim(x, y);
  }
  return 0.0;
}

}  // namespace ontomatch
