// Acceptance suite: one pass/fail line per criterion. Criteria 7 and 8 run
// the real CLI binary; the others exercise the library directly.
//
// Usage: acceptance_tests [data_dir] [cli_binary] [work_dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ontomatch/alignment.hpp"
#include "ontomatch/assignment.hpp"
#include "ontomatch/evaluation.hpp"
#include "ontomatch/io.hpp"
#include "ontomatch/lexicon.hpp"
#include "ontomatch/ontology.hpp"
#include "ontomatch/score_matrix.hpp"
#include "ontomatch/string_metrics.hpp"
#include "process_util.hpp"
#include "test_util.hpp"

using namespace ontomatch;
namespace fs = std::filesystem;

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

struct Context {
  fs::path data_dir;
  std::string cli;
  fs::path work_dir;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1 -----------------------------------------------------------

void assignment_optimality(const Context&) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(101);
  for (int round = 0; round < 500; ++round) {
    ScoreMatrix matrix = test_util::random_matrix(rng, 6);
    Assignment assignment = kuhn_munkres(matrix);
    double oracle = test_util::best_assignment_weight(matrix);
    require(std::abs(assignment.total_weight - oracle) <= 1e-9,
            "solver total " + std::to_string(assignment.total_weight) + " != enumerated optimum " +
                std::to_string(oracle));
  }
  require(seconds_since(start) < 5.0, "took longer than 5 s");
}

// --- criterion 2 -----------------------------------------------------------

void edit_distance_oracle(const Context&) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(103);
  for (int round = 0; round < 1000; ++round) {
    std::string x = test_util::random_word(rng, 7);
    std::string y = test_util::random_word(rng, 7);
    std::size_t d = test_util::naive_edit_distance(x, y);
    std::size_t longest = std::max(x.size(), y.size());
    double expected = longest == 0 ? 1.0 : 1.0 - static_cast<double>(d) / longest;
    require(levenshtein_sim(x, y) == expected,
            "mismatch for '" + x + "' / '" + y + "'");
  }
  require(seconds_since(start) < 10.0, "took longer than 10 s");
}

// --- criterion 3 -----------------------------------------------------------

void metric_laws(const Context&) {
  std::mt19937 rng(107);
  for (MetricId metric : {MetricId::Levenshtein, MetricId::QGram, MetricId::SmithWaterman,
                          MetricId::Jaccard}) {
    for (int round = 0; round < 1000; ++round) {
      std::string x = test_util::random_word(rng, 10, "abcd ");
      std::string y = test_util::random_word(rng, 10, "abcd ");
      double xy = similarity(metric, x, y);
      require(xy == similarity(metric, y, x),
              std::string(metric_name(metric)) + " not symmetric on '" + x + "'/'" + y + "'");
      require(xy >= 0.0 && xy <= 1.0,
              std::string(metric_name(metric)) + " out of range on '" + x + "'/'" + y + "'");
      require(similarity(metric, x, x) == 1.0,
              std::string(metric_name(metric)) + " identity broken on '" + x + "'");
    }
  }
}

// --- criterion 4 -----------------------------------------------------------

void semantic_constants(const Context& context) {
  LexicalResource lexicon = load_lexicon(read_file(context.data_dir / "lexicon.txt"));
  require(lexicon.semantic_score("pizza", "food") == 0.7,
          "semantic_score(pizza, food) != 0.7 with the bundled lexicon");

  Ontology source =
      parse_rdfxml(read_file(context.data_dir / "fixtures" / "periodical_source.rdf"));
  Ontology target =
      parse_rdfxml(read_file(context.data_dir / "fixtures" / "journal_target.rdf"));
  EngineConfig config;
  std::vector<std::pair<ScoreMatrix, Assignment>> blocks;
  for (ScoreMatrix& matrix : build_all_blocks(source, target, config, lexicon)) {
    Assignment retained =
        filter_assignment(kuhn_munkres(matrix), matrix, config.acceptance_threshold);
    blocks.emplace_back(std::move(matrix), std::move(retained));
  }
  Alignment alignment = assemble_alignment(blocks, source.uri, target.uri);

  bool found = false;
  for (const Correspondence& cell : alignment.cells) {
    if (local_name_of(cell.entity1) == "Periodical") {
      require(local_name_of(cell.entity2) == "Journal",
              "Periodical aligned to " + cell.entity2 + " instead of Journal");
      require(cell.measure == 0.7, "Periodical/Journal measure is not 0.7");
      found = true;
    }
  }
  require(found, "Periodical/Journal cell missing from the end-to-end alignment");
}

// --- criterion 5 -----------------------------------------------------------

void alignment_round_trip(const Context& context) {
  std::mt19937 rng(109);
  for (int round = 0; round < 200; ++round) {
    Alignment alignment = test_util::random_alignment(rng);
    Alignment back = parse_alignment(serialize_alignment(alignment));
    require(back == alignment, "round trip changed the alignment");
  }

  // Serializing the two-class scenario must carry the exact datatype URI and
  // relation element.
  LexicalResource lexicon = load_lexicon(read_file(context.data_dir / "lexicon.txt"));
  Ontology source =
      parse_rdfxml(read_file(context.data_dir / "fixtures" / "periodical_source.rdf"));
  Ontology target =
      parse_rdfxml(read_file(context.data_dir / "fixtures" / "journal_target.rdf"));
  EngineConfig config;
  std::vector<std::pair<ScoreMatrix, Assignment>> blocks;
  for (ScoreMatrix& matrix : build_all_blocks(source, target, config, lexicon)) {
    Assignment retained =
        filter_assignment(kuhn_munkres(matrix), matrix, config.acceptance_threshold);
    blocks.emplace_back(std::move(matrix), std::move(retained));
  }
  std::string document =
      serialize_alignment(assemble_alignment(blocks, source.uri, target.uri));
  require(document.find("rdf:datatype=\"http://www.w3.org/2001/XMLSchema#float\"") !=
              std::string::npos,
          "serialized document lacks the measure datatype URI");
  require(document.find("<relation>=</relation>") != std::string::npos,
          "serialized document lacks <relation>=</relation>");
}

// --- criterion 6 -----------------------------------------------------------

void evaluation_arithmetic(const Context&) {
  Alignment system, reference;
  for (int i = 0; i < 8; ++i) {
    Correspondence shared{i + 1, "http://a#s" + std::to_string(i),
                          "http://b#t" + std::to_string(i), "=", 1.0};
    system.cells.push_back(shared);
    reference.cells.push_back(shared);
  }
  for (int i = 0; i < 2; ++i) {
    system.cells.push_back(Correspondence{9 + i, "http://a#sys" + std::to_string(i),
                                          "http://b#sys" + std::to_string(i), "=", 1.0});
  }
  for (int i = 0; i < 4; ++i) {
    reference.cells.push_back(Correspondence{9 + i, "http://a#ref" + std::to_string(i),
                                             "http://b#ref" + std::to_string(i), "=", 1.0});
  }
  EvalReport report = evaluate(system, reference);
  require(report.system_total == 10 && report.correct == 8 && report.reference_total == 12,
          "counting went wrong");
  require(std::abs(report.precision - 0.800000) <= 1e-6, "precision != 0.800000");
  require(std::abs(report.recall - 0.666667) <= 1e-6, "recall != 0.666667");
  require(std::abs(report.f_measure - 0.727273) <= 1e-6, "f-measure != 0.727273");

  std::mt19937 rng(113);
  int checked = 0;
  while (checked < 50) {
    Alignment alignment = test_util::random_alignment(rng);
    if (alignment.cells.empty()) continue;
    EvalReport self = evaluate(alignment, alignment);
    require(self.precision == 1.0 && self.recall == 1.0 && self.f_measure == 1.0,
            "evaluate(a, a) not perfect");
    ++checked;
  }
}

// --- criteria 7 and 8 ------------------------------------------------------

struct EndToEndFiles {
  fs::path with_lexicon;
  fs::path without_lexicon;
};

EndToEndFiles run_end_to_end(const Context& context, const std::string& tag) {
  EndToEndFiles files{context.work_dir / ("synth_lex_" + tag + ".rdf"),
                      context.work_dir / ("synth_nolex_" + tag + ".rdf")};
  fs::path source = context.data_dir / "fixtures" / "synth_source.rdf";
  fs::path target = context.data_dir / "fixtures" / "synth_target.ont";
  fs::path lexicon = context.data_dir / "lexicon.txt";

  process_util::RunResult with_lex = process_util::run(
      context.cli,
      {"match", source.string(), target.string(), "--metric", "levenshtein", "--lexicon",
       lexicon.string(), "--output", files.with_lexicon.string()},
      context.work_dir);
  require(with_lex.exit_code == 0, "match with lexicon exited " +
                                       std::to_string(with_lex.exit_code) + ": " + with_lex.err);

  process_util::RunResult without_lex = process_util::run(
      context.cli,
      {"match", source.string(), target.string(), "--metric", "levenshtein", "--no-lexicon",
       "--output", files.without_lexicon.string()},
      context.work_dir);
  require(without_lex.exit_code == 0, "match without lexicon exited " +
                                          std::to_string(without_lex.exit_code) + ": " +
                                          without_lex.err);
  return files;
}

void end_to_end_known_truth(const Context& context) {
  require(!context.cli.empty(), "no CLI binary path supplied");
  auto start = std::chrono::steady_clock::now();
  EndToEndFiles files = run_end_to_end(context, "a");

  Alignment reference =
      parse_alignment(read_file(context.data_dir / "fixtures" / "synth_reference.rdf"));
  require(reference.cells.size() == 20, "reference fixture does not hold 20 cells");

  EvalReport with_lex = evaluate(parse_alignment(read_file(files.with_lexicon)), reference);
  require(with_lex.precision == 1.0 && with_lex.recall == 1.0 && with_lex.f_measure == 1.0,
          "with lexicon: expected P=R=F=1, got P=" + std::to_string(with_lex.precision) +
              " R=" + std::to_string(with_lex.recall));

  EvalReport without_lex =
      evaluate(parse_alignment(read_file(files.without_lexicon)), reference);
  require(without_lex.correct == 12, "without lexicon: expected 12 correct cells, got " +
                                         std::to_string(without_lex.correct));
  require(without_lex.recall == 0.6, "without lexicon: recall != 0.6 exactly");

  require(seconds_since(start) < 1.0, "took longer than 1 s");
}

void determinism(const Context& context) {
  require(!context.cli.empty(), "no CLI binary path supplied");
  EndToEndFiles first = run_end_to_end(context, "b");
  EndToEndFiles second = run_end_to_end(context, "c");
  require(read_file(first.with_lexicon) == read_file(second.with_lexicon),
          "repeated lexicon runs differ");
  require(read_file(first.without_lexicon) == read_file(second.without_lexicon),
          "repeated string-only runs differ");
}

}  // namespace

int main(int argc, char** argv) {
  Context context;
  context.data_dir = argc > 1 ? fs::path(argv[1]) : fs::path("data");
  context.cli = argc > 2 ? argv[2] : "";
  context.work_dir = argc > 3 ? fs::path(argv[3]) : fs::path("acceptance_work");
  fs::create_directories(context.work_dir);

  struct Criterion {
    int number;
    const char* name;
    std::function<void(const Context&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "assignment optimality vs exhaustive enumeration (500 matrices)", assignment_optimality},
      {2, "edit-distance similarity vs recursive oracle (1000 pairs)", edit_distance_oracle},
      {3, "metric symmetry, identity and range (1000 pairs per metric)", metric_laws},
      {4, "semantic constants and the periodical/journal 0.7 cell", semantic_constants},
      {5, "alignment serialization round trip (200 alignments)", alignment_round_trip},
      {6, "evaluation arithmetic and self-evaluation", evaluation_arithmetic},
      {7, "end-to-end known-truth pair with and without the lexicon", end_to_end_known_truth},
      {8, "byte-identical repeated runs", determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    try {
      criterion.run(context);
      std::printf("PASS  criterion %d: %s\n", criterion.number, criterion.name);
    } catch (const CheckFailure& failure) {
      std::printf("FAIL  criterion %d: %s\n      %s\n", criterion.number, criterion.name,
                  failure.message.c_str());
      ++failures;
    } catch (const std::exception& error) {
      std::printf("FAIL  criterion %d: %s\n      unexpected error: %s\n", criterion.number,
                  criterion.name, error.what());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
