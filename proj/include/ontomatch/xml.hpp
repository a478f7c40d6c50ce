#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/errors.hpp"

namespace ontomatch::xml {

/// One element of a parsed document. Names and attribute keys are kept
/// exactly as written (prefixes included); no namespace resolution happens.
struct Node {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<Node> children;
  std::string text;  // character data directly inside this element

  const Node* first_child(std::string_view child_name) const;
  const std::string* attribute(std::string_view key) const;
  std::string trimmed_text() const;
};

/// Parses a whole document into its root element. Throws MalformedXml with
/// the offending line on any well-formedness violation.
Node parse_document(std::string_view document);

/// Escapes &, <, >, " and ' for use in element content or attribute values.
std::string escape(std::string_view text);

}  // namespace ontomatch::xml
