#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace ontomatch {

enum class MetricId { Levenshtein, QGram, SmithWaterman, Jaccard };

/// CLI spellings: levenshtein, qgram, smith-waterman, jaccard.
std::optional<MetricId> metric_from_name(std::string_view name);
std::string_view metric_name(MetricId id);

// Scoring constants. The q-gram metric uses padded bigrams with a Dice
// normalization; Smith-Waterman uses the usual +2/-1/-1 scheme scaled by the
// best score a full match of the shorter string could reach.
inline constexpr std::size_t kQGramSize = 2;
inline constexpr char kQGramPad = '#';
inline constexpr int kSwMatch = 2;
inline constexpr int kSwMismatch = -1;
inline constexpr int kSwGap = -1;

/// Unit-cost insert/delete/substitute edit distance.
std::size_t edit_distance(std::string_view x, std::string_view y);

// All four metrics are pure, symmetric, map equal strings to 1.0 and stay
// within [0,1]. Both-empty inputs score 1.0.
double levenshtein_sim(std::string_view x, std::string_view y);
double qgram_sim(std::string_view x, std::string_view y);
double smith_waterman_sim(std::string_view x, std::string_view y);
double jaccard_sim(std::string_view x, std::string_view y);

double similarity(MetricId metric, std::string_view x, std::string_view y);

}  // namespace ontomatch
