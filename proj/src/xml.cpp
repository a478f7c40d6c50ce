#include "ontomatch/xml.hpp"

#include <expat.h>

#include <cctype>
#include <memory>

namespace ontomatch::xml {

const Node* Node::first_child(std::string_view child_name) const {
  for (const Node& child : children) {
    if (child.name == child_name) return &child;
  }
  return nullptr;
}

const std::string* Node::attribute(std::string_view key) const {
  auto it = attributes.find(std::string(key));
  return it == attributes.end() ? nullptr : &it->second;
}

std::string Node::trimmed_text() const {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

namespace {

struct TreeBuilder {
  Node root;
  bool have_root = false;
  std::vector<Node*> open;  // pointers stay valid: only the innermost open
                            // element ever grows its children vector
};

void on_start(void* user_data, const XML_Char* name, const XML_Char** attrs) {
  auto* builder = static_cast<TreeBuilder*>(user_data);
  Node node;
  node.name = name;
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    node.attributes.emplace(attrs[i], attrs[i + 1]);
  }
  if (builder->open.empty()) {
    builder->root = std::move(node);
    builder->have_root = true;
    builder->open.push_back(&builder->root);
  } else {
    Node* parent = builder->open.back();
    parent->children.push_back(std::move(node));
    builder->open.push_back(&parent->children.back());
  }
}

void on_end(void* user_data, const XML_Char*) {
  auto* builder = static_cast<TreeBuilder*>(user_data);
  builder->open.pop_back();
}

void on_text(void* user_data, const XML_Char* data, int length) {
  auto* builder = static_cast<TreeBuilder*>(user_data);
  if (!builder->open.empty()) {
    builder->open.back()->text.append(data, static_cast<std::size_t>(length));
  }
}

struct ParserHandle {
  XML_Parser parser;
  explicit ParserHandle(XML_Parser p) : parser(p) {}
  ~ParserHandle() { XML_ParserFree(parser); }
  ParserHandle(const ParserHandle&) = delete;
  ParserHandle& operator=(const ParserHandle&) = delete;
};

}  // namespace

Node parse_document(std::string_view document) {
  ParserHandle handle(XML_ParserCreate(nullptr));
  XML_Parser parser = handle.parser;

  TreeBuilder builder;
  XML_SetUserData(parser, &builder);
  XML_SetElementHandler(parser, on_start, on_end);
  XML_SetCharacterDataHandler(parser, on_text);

  if (XML_Parse(parser, document.data(), static_cast<int>(document.size()), /*isFinal=*/1) ==
      XML_STATUS_ERROR) {
    throw MalformedXml(XML_ErrorString(XML_GetErrorCode(parser)),
                       static_cast<int>(XML_GetCurrentLineNumber(parser)));
  }
  if (!builder.have_root) {
    throw MalformedXml("document has no root element", 1);
  }
  return std::move(builder.root);
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace ontomatch::xml
