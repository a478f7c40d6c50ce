#include "ontomatch/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "ontomatch/xml.hpp"

namespace ontomatch {

namespace {

constexpr std::string_view kAlignmentNs = "http://knowledgeweb.semanticweb.org/heterogeneity/alignment";
constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kMeasureDatatype = "http://www.w3.org/2001/XMLSchema#float";

// Shortest decimal form that parses back to the same double, always with a
// decimal digit ("1" becomes "1.0").
std::string format_measure(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  std::string text(buffer, result.ptr);
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos) {
    text += ".0";
  }
  return text;
}

}  // namespace

Alignment assemble_alignment(const std::vector<std::pair<ScoreMatrix, Assignment>>& blocks,
                             const std::string& onto1, const std::string& onto2) {
  Alignment alignment;
  alignment.onto1 = onto1;
  alignment.onto2 = onto2;
  for (const auto& [matrix, retained] : blocks) {
    for (const auto& [i, j] : retained.pairs) {
      Correspondence cell;
      cell.entity1 = matrix.rows[i];
      cell.entity2 = matrix.cols[j];
      cell.measure = matrix.at(i, j);
      alignment.cells.push_back(std::move(cell));
    }
  }
  std::sort(alignment.cells.begin(), alignment.cells.end(), [](const auto& a, const auto& b) {
    return std::tie(a.entity1, a.entity2) < std::tie(b.entity1, b.entity2);
  });
  for (std::size_t i = 0; i < alignment.cells.size(); ++i) {
    alignment.cells[i].id = static_cast<int>(i + 1);
  }
  return alignment;
}

std::string serialize_alignment(const Alignment& alignment) {
  std::vector<Correspondence> cells = alignment.cells;
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return std::tie(a.entity1, a.entity2) < std::tie(b.entity1, b.entity2);
  });

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
  out += "<rdf:RDF xmlns=\"";
  out += kAlignmentNs;
  out += "\"\n         xmlns:rdf=\"";
  out += kRdfNs;
  out += "\">\n";
  out += "<Alignment>\n";
  out += "  <xml>yes</xml>\n";
  out += "  <level>" + xml::escape(alignment.level) + "</level>\n";
  out += "  <type>" + xml::escape(alignment.type_code) + "</type>\n";
  out += "  <onto1>" + xml::escape(alignment.onto1) + "</onto1>\n";
  out += "  <onto2>" + xml::escape(alignment.onto2) + "</onto2>\n";
  out += "  <uri1>" + xml::escape(alignment.onto1) + "</uri1>\n";
  out += "  <uri2>" + xml::escape(alignment.onto2) + "</uri2>\n";
  for (const Correspondence& cell : cells) {
    out += "  <map>\n";
    out += "    <Cell>\n";
    out += "      <entity1 rdf:resource=\"" + xml::escape(cell.entity1) + "\"/>\n";
    out += "      <entity2 rdf:resource=\"" + xml::escape(cell.entity2) + "\"/>\n";
    out += "      <measure rdf:datatype=\"";
    out += kMeasureDatatype;
    out += "\">" + format_measure(cell.measure) + "</measure>\n";
    out += "      <relation>" + xml::escape(cell.relation) + "</relation>\n";
    out += "    </Cell>\n";
    out += "  </map>\n";
  }
  out += "</Alignment>\n";
  out += "</rdf:RDF>\n";
  return out;
}

namespace {

const xml::Node& alignment_root(const xml::Node& root) {
  if (root.name == "Alignment") return root;
  if (const xml::Node* nested = root.first_child("Alignment")) return *nested;
  throw MissingField("document contains no Alignment element");
}

std::string resource_of(const xml::Node& cell, std::string_view element) {
  const xml::Node* node = cell.first_child(element);
  if (node == nullptr) {
    throw MissingField("cell lacking " + std::string(element));
  }
  if (const std::string* resource = node->attribute("rdf:resource")) return *resource;
  // Tolerate the IRI as element text as well.
  std::string text = node->trimmed_text();
  if (text.empty()) {
    throw MissingField("cell " + std::string(element) + " has no rdf:resource");
  }
  return text;
}

}  // namespace

Alignment parse_alignment(std::string_view document) {
  xml::Node root = xml::parse_document(document);
  const xml::Node& node = alignment_root(root);

  Alignment alignment;
  if (const xml::Node* level = node.first_child("level")) alignment.level = level->trimmed_text();
  if (const xml::Node* type = node.first_child("type")) alignment.type_code = type->trimmed_text();
  if (const xml::Node* onto1 = node.first_child("onto1")) alignment.onto1 = onto1->trimmed_text();
  if (const xml::Node* onto2 = node.first_child("onto2")) alignment.onto2 = onto2->trimmed_text();
  if (alignment.onto1.empty()) {
    if (const xml::Node* uri1 = node.first_child("uri1")) alignment.onto1 = uri1->trimmed_text();
  }
  if (alignment.onto2.empty()) {
    if (const xml::Node* uri2 = node.first_child("uri2")) alignment.onto2 = uri2->trimmed_text();
  }

  for (const xml::Node& map : node.children) {
    if (map.name != "map") continue;
    for (const xml::Node& cell : map.children) {
      if (cell.name != "Cell") continue;
      Correspondence correspondence;
      correspondence.entity1 = resource_of(cell, "entity1");
      correspondence.entity2 = resource_of(cell, "entity2");

      const xml::Node* measure = cell.first_child("measure");
      if (measure == nullptr) throw MissingField("cell lacking measure");
      std::string measure_text = measure->trimmed_text();
      char* end = nullptr;
      correspondence.measure = std::strtod(measure_text.c_str(), &end);
      if (measure_text.empty() || end != measure_text.c_str() + measure_text.size()) {
        throw MissingField("cell measure is not a number: '" + measure_text + "'");
      }

      const xml::Node* relation = cell.first_child("relation");
      if (relation == nullptr) throw MissingField("cell lacking relation");
      correspondence.relation = relation->trimmed_text();

      correspondence.id = static_cast<int>(alignment.cells.size() + 1);
      alignment.cells.push_back(std::move(correspondence));
    }
  }
  return alignment;
}

}  // namespace ontomatch
