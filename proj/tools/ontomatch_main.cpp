// ontomatch: align two ontologies with string + lexical-resource similarity,
// solve each entity-kind block as a maximum-weight assignment, and emit or
// evaluate RDF alignment files.

#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ontomatch/alignment.hpp"
#include "ontomatch/assignment.hpp"
#include "ontomatch/evaluation.hpp"
#include "ontomatch/io.hpp"
#include "ontomatch/lexicon.hpp"
#include "ontomatch/ontology.hpp"
#include "ontomatch/score_matrix.hpp"

namespace {

using namespace ontomatch;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // parse/config errors
constexpr int kExitIo = 2;     // file I/O failures

struct MatchOptions {
  std::string source_path;
  std::string target_path;
  std::string metric = "levenshtein";
  std::string lexicon_path;
  bool no_lexicon = false;
  double semantic_trigger = 0.8;
  double acceptance_threshold = 0.5;
  std::string output_path;
  std::string base1;
  std::string base2;
};

struct EvalOptions {
  std::string system_path;
  std::string reference_path;
  std::string tsv_path;
};

struct BatchOptions {
  std::string manifest_path;
  std::string tsv_path;
};

std::optional<std::string> optional_string(const std::string& value) {
  if (value.empty()) return std::nullopt;
  return value;
}

// A document whose first non-blank byte is '<' is RDF/XML; anything else is
// the native line format.
Ontology parse_ontology_text(const std::string& text, const std::optional<std::string>& base) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '<') {
    return parse_rdfxml(text, base);
  }
  return parse_native(text, base);
}

int run_match(const MatchOptions& options) {
  Ontology source = parse_ontology_text(read_file(options.source_path),
                                        optional_string(options.base1));
  Ontology target = parse_ontology_text(read_file(options.target_path),
                                        optional_string(options.base2));

  LexicalResource lexicon;
  if (!options.no_lexicon && !options.lexicon_path.empty()) {
    lexicon = load_lexicon(read_file(options.lexicon_path));
  }

  EngineConfig config;
  config.metric = *metric_from_name(options.metric);
  config.semantic_trigger = options.semantic_trigger;
  config.acceptance_threshold = options.acceptance_threshold;

  std::vector<std::pair<ScoreMatrix, Assignment>> blocks;
  for (ScoreMatrix& matrix : build_all_blocks(source, target, config, lexicon)) {
    Assignment full = kuhn_munkres(matrix);
    Assignment retained = filter_assignment(full, matrix, config.acceptance_threshold);
    blocks.emplace_back(std::move(matrix), std::move(retained));
  }

  Alignment alignment = assemble_alignment(blocks, source.uri, target.uri);
  std::string document = serialize_alignment(alignment);
  if (options.output_path.empty()) {
    std::cout << document;
  } else {
    write_file(options.output_path, document);
  }
  std::cerr << blocks.size() << " block(s) solved, " << alignment.cells.size()
            << " cell(s) emitted\n";
  return kExitOk;
}

void print_report(const EvalReport& report) {
  auto fixed6 = [](double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return std::string(buffer);
  };
  std::cout << "correct:    " << report.correct << "\n"
            << "system:     " << report.system_total << "\n"
            << "reference:  " << report.reference_total << "\n"
            << "precision:  " << fixed6(report.precision) << "\n"
            << "recall:     " << fixed6(report.recall) << "\n"
            << "f-measure:  " << fixed6(report.f_measure) << "\n";
}

int run_eval(const EvalOptions& options) {
  std::vector<BatchEntry> entries{
      BatchEntry{options.system_path, options.reference_path, options.system_path}};
  BatchReport report = batch_evaluate(entries);
  print_report(report.rows.front().report);
  if (!options.tsv_path.empty()) {
    write_file(options.tsv_path, report.tsv());
  }
  return kExitOk;
}

std::vector<BatchEntry> read_manifest(const std::string& path) {
  std::string text = read_file(path);
  std::vector<BatchEntry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos
                                                                   : end - start);
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw InputError("manifest line " + std::to_string(line_no) +
                       ": expected system<TAB>reference<TAB>label");
    }
    BatchEntry entry;
    entry.system_path = line.substr(0, tab1);
    entry.reference_path = line.substr(tab1 + 1, tab2 - tab1 - 1);
    entry.label = line.substr(tab2 + 1);
    if (entry.system_path.empty() || entry.reference_path.empty() || entry.label.empty()) {
      throw InputError("manifest line " + std::to_string(line_no) + ": empty field");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

int run_batch(const BatchOptions& options) {
  BatchReport report = batch_evaluate(read_manifest(options.manifest_path));
  std::cout << report.table();
  if (!options.tsv_path.empty()) {
    write_file(options.tsv_path, report.tsv());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontology alignment toolkit"};
  app.require_subcommand(1);

  MatchOptions match_options;
  CLI::App* match = app.add_subcommand("match", "Align a source ontology with a target ontology");
  match->add_option("source", match_options.source_path, "source ontology file")->required();
  match->add_option("target", match_options.target_path, "target ontology file")->required();
  match->add_option("--metric", match_options.metric, "string similarity metric")
      ->check(CLI::IsMember({"levenshtein", "qgram", "smith-waterman", "jaccard"}))
      ->capture_default_str();
  auto* lexicon_option =
      match->add_option("--lexicon", match_options.lexicon_path, "lexical resource file");
  match->add_flag("--no-lexicon", match_options.no_lexicon, "string matching only")
      ->excludes(lexicon_option);
  match->add_option("--semantic-trigger", match_options.semantic_trigger,
                    "string score below which the lexicon is consulted")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  match->add_option("--threshold", match_options.acceptance_threshold,
                    "minimum score for an emitted correspondence")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  match->add_option("--output", match_options.output_path,
                    "alignment output file (default: stdout)");
  match->add_option("--base1", match_options.base1, "base IRI override for the source");
  match->add_option("--base2", match_options.base2, "base IRI override for the target");

  EvalOptions eval_options;
  CLI::App* eval = app.add_subcommand("eval", "Score a system alignment against a reference");
  eval->add_option("system", eval_options.system_path, "system alignment file")->required();
  eval->add_option("reference", eval_options.reference_path, "reference alignment file")
      ->required();
  eval->add_option("--tsv", eval_options.tsv_path, "also write a tab-separated row");

  BatchOptions batch_options;
  CLI::App* batch = app.add_subcommand("batch", "Evaluate a manifest of alignment pairs");
  batch->add_option("manifest", batch_options.manifest_path,
                    "file of system<TAB>reference<TAB>label lines")
      ->required();
  batch->add_option("--tsv", batch_options.tsv_path, "also write tab-separated rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (match->parsed()) return run_match(match_options);
    if (eval->parsed()) return run_eval(eval_options);
    return run_batch(batch_options);
  } catch (const IoError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitIo;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
}
