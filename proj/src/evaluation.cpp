#include "ontomatch/evaluation.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "ontomatch/io.hpp"

namespace ontomatch {

EvalReport evaluate(const Alignment& system, const Alignment& reference) {
  std::set<std::pair<std::string, std::string>> reference_pairs;
  for (const Correspondence& cell : reference.cells) {
    reference_pairs.emplace(cell.entity1, cell.entity2);
  }
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t correct = 0;
  for (const Correspondence& cell : system.cells) {
    auto pair = std::make_pair(cell.entity1, cell.entity2);
    if (reference_pairs.count(pair) > 0 && seen.insert(pair).second) ++correct;
  }

  EvalReport report;
  report.correct = correct;
  report.system_total = system.cells.size();
  report.reference_total = reference.cells.size();
  if (report.system_total > 0) {
    report.precision = static_cast<double>(correct) / static_cast<double>(report.system_total);
  }
  if (report.reference_total > 0) {
    report.recall = static_cast<double>(correct) / static_cast<double>(report.reference_total);
  }
  if (report.precision + report.recall > 0.0) {
    report.f_measure =
        2.0 * report.precision * report.recall / (report.precision + report.recall);
  }
  return report;
}

namespace {

std::string fixed6(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

}  // namespace

std::string BatchReport::table() const {
  std::size_t label_width = 5;  // "label"
  for (const BatchRow& row : rows) label_width = std::max(label_width, row.label.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width + 2)) << "label"
      << std::setw(11) << "precision" << std::setw(11) << "recall"
      << "f-measure\n";
  for (const BatchRow& row : rows) {
    out << std::left << std::setw(static_cast<int>(label_width + 2)) << row.label
        << std::setw(11) << fixed6(row.report.precision) << std::setw(11)
        << fixed6(row.report.recall) << fixed6(row.report.f_measure) << "\n";
  }
  return out.str();
}

std::string BatchReport::tsv() const {
  std::string out;
  for (const BatchRow& row : rows) {
    out += row.label;
    out += '\t';
    out += fixed6(row.report.precision);
    out += '\t';
    out += fixed6(row.report.recall);
    out += '\t';
    out += fixed6(row.report.f_measure);
    out += '\n';
  }
  return out;
}

BatchReport batch_evaluate(const std::vector<BatchEntry>& entries) {
  BatchReport report;
  for (const BatchEntry& entry : entries) {
    auto parse_with_context = [](const std::string& path) {
      std::string text = read_file(path);
      try {
        return parse_alignment(text);
      } catch (const IoError&) {
        throw;
      } catch (const std::exception& error) {
        throw InputError(path + ": " + error.what());
      }
    };
    Alignment system = parse_with_context(entry.system_path);
    Alignment reference = parse_with_context(entry.reference_path);
    report.rows.push_back(BatchRow{entry.label, evaluate(system, reference)});
  }
  return report;
}

}  // namespace ontomatch
