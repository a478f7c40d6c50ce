#include "ontomatch/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ontomatch/xml.hpp"

namespace ontomatch {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "class";
    case EntityKind::Property: return "property";
    case EntityKind::Instance: return "instance";
  }
  return "unknown";
}

const Entity* Ontology::find(std::string_view iri) const {
  for (const Entity& entity : entities) {
    if (entity.iri == iri) return &entity;
  }
  return nullptr;
}

void Ontology::validate() const {
  std::map<std::string_view, const Entity*> by_iri;
  for (const Entity& entity : entities) {
    if (entity.iri.empty()) throw std::logic_error("entity with empty IRI");
    if (entity.local_name.empty()) throw std::logic_error("entity with empty local name");
    if (!by_iri.emplace(entity.iri, &entity).second) {
      throw std::logic_error("duplicate IRI in entity list: " + entity.iri);
    }
  }
  auto require = [&](const std::string& iri, EntityKind kind, const char* role) {
    auto it = by_iri.find(iri);
    if (it == by_iri.end()) {
      throw std::logic_error(std::string("edge ") + role + " not declared: " + iri);
    }
    if (it->second->kind != kind) {
      throw std::logic_error(std::string("edge ") + role + " has wrong kind: " + iri);
    }
  };
  for (const auto& [child, parent] : subsumption) {
    require(child, EntityKind::Class, "subsumption child");
    require(parent, EntityKind::Class, "subsumption parent");
  }
  for (const auto& [instance, cls] : instance_of) {
    require(instance, EntityKind::Instance, "instance");
    require(cls, EntityKind::Class, "instance class");
  }
  for (const auto& [property, domain] : property_attachment) {
    require(property, EntityKind::Property, "property");
    require(domain, EntityKind::Class, "property domain");
  }
}

std::string normalize_label(std::string_view raw) {
  auto upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
  auto lower_or_digit = [](char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::islower(u) != 0 || std::isdigit(u) != 0;
  };

  std::string spaced;
  spaced.reserve(raw.size() + 8);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c == '_' || c == '-' || c == '.' || std::isspace(static_cast<unsigned char>(c))) {
      spaced.push_back(' ');
      continue;
    }
    if (upper(c)) {
      bool after_word = i > 0 && lower_or_digit(raw[i - 1]);
      bool acronym_end = i > 0 && upper(raw[i - 1]) && i + 1 < raw.size() &&
                         std::islower(static_cast<unsigned char>(raw[i + 1]));
      if (after_word || acronym_end) spaced.push_back(' ');
      spaced.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      spaced.push_back(c);
    }
  }

  std::string out;
  out.reserve(spaced.size());
  for (char c : spaced) {
    if (c == ' ') {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string display_name(const Entity& entity) {
  if (!entity.labels.empty()) return normalize_label(entity.labels.front());
  return normalize_label(entity.local_name);
}

std::vector<Entity> entities_by_kind(const Ontology& ontology, EntityKind kind) {
  std::vector<Entity> out;
  for (const Entity& entity : ontology.entities) {
    if (entity.kind == kind) out.push_back(entity);
  }
  return out;
}

std::string local_name_of(std::string_view iri) {
  if (auto pos = iri.rfind('#'); pos != std::string_view::npos) {
    return std::string(iri.substr(pos + 1));
  }
  if (auto pos = iri.rfind('/'); pos != std::string_view::npos) {
    return std::string(iri.substr(pos + 1));
  }
  return std::string(iri);
}

// ---------------------------------------------------------------------------
// RDF/XML subset
// ---------------------------------------------------------------------------

namespace {

std::string strip_trailing_hash(std::string base) {
  while (!base.empty() && base.back() == '#') base.pop_back();
  return base;
}

bool is_absolute_iri(std::string_view value) {
  auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (char c : value.substr(0, colon)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

std::string resolve_iri(const std::string& base, std::string_view value) {
  if (value.empty()) return {};
  if (value.front() == '#') return base + std::string(value);
  if (is_absolute_iri(value)) return std::string(value);
  return base + "#" + std::string(value);
}

struct RdfDecl {
  std::string iri;
  std::optional<EntityKind> kind;  // empty for bare rdf:Description nodes
  std::vector<std::string> labels;
  std::vector<std::string> parents;  // rdfs:subClassOf resources
  std::vector<std::string> domains;  // rdfs:domain resources
  std::vector<std::string> types;    // rdf:type resources
};

std::optional<EntityKind> decl_kind(const std::string& element) {
  if (element == "owl:Class") return EntityKind::Class;
  if (element == "owl:ObjectProperty" || element == "owl:DatatypeProperty") {
    return EntityKind::Property;
  }
  if (element == "owl:NamedIndividual") return EntityKind::Instance;
  return std::nullopt;
}

class RdfCollector {
public:
  explicit RdfCollector(std::string base) : base_(std::move(base)) {}

  void walk(const xml::Node& node) {
    std::optional<EntityKind> kind = decl_kind(node.name);
    bool is_description = node.name == "rdf:Description";
    if (kind || is_description) {
      std::string iri = node_iri(node);
      if (!iri.empty() && !local_name_of(iri).empty()) {
        RdfDecl& decl = declaration_for(iri);
        if (kind && !decl.kind) decl.kind = kind;
        collect_statements(node, decl);
      }
    }
    for (const xml::Node& child : node.children) walk(child);
  }

  std::vector<RdfDecl> take() { return std::move(ordered_); }

private:
  std::string node_iri(const xml::Node& node) const {
    if (const std::string* about = node.attribute("rdf:about")) {
      return resolve_iri(base_, *about);
    }
    if (const std::string* id = node.attribute("rdf:ID")) {
      if (id->empty()) return {};
      return base_ + "#" + *id;
    }
    return {};
  }

  RdfDecl& declaration_for(const std::string& iri) {
    auto it = index_.find(iri);
    if (it == index_.end()) {
      ordered_.push_back(RdfDecl{iri, std::nullopt, {}, {}, {}, {}});
      it = index_.emplace(iri, ordered_.size() - 1).first;
    }
    return ordered_[it->second];
  }

  void collect_statements(const xml::Node& node, RdfDecl& decl) {
    for (const xml::Node& child : node.children) {
      if (child.name == "rdfs:label") {
        std::string label = child.trimmed_text();
        if (!label.empty()) decl.labels.push_back(std::move(label));
      } else if (child.name == "rdfs:subClassOf") {
        if (const std::string* res = child.attribute("rdf:resource")) {
          decl.parents.push_back(resolve_iri(base_, *res));
        }
      } else if (child.name == "rdfs:domain") {
        if (const std::string* res = child.attribute("rdf:resource")) {
          decl.domains.push_back(resolve_iri(base_, *res));
        }
      } else if (child.name == "rdf:type") {
        if (const std::string* res = child.attribute("rdf:resource")) {
          decl.types.push_back(resolve_iri(base_, *res));
        }
      }
    }
  }

  std::string base_;
  std::vector<RdfDecl> ordered_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

Ontology parse_rdfxml(std::string_view document, const std::optional<std::string>& base_override) {
  xml::Node root = xml::parse_document(document);

  std::string base;
  if (base_override) {
    base = strip_trailing_hash(*base_override);
  } else if (const std::string* attr = root.attribute("xml:base")) {
    base = strip_trailing_hash(*attr);
  }
  if (base.empty()) {
    throw MissingOntologyUri("no base IRI: document has no xml:base and no override was given");
  }

  RdfCollector collector(base);
  collector.walk(root);
  std::vector<RdfDecl> decls = collector.take();

  std::map<std::string, EntityKind> kinds;
  for (const RdfDecl& decl : decls) {
    if (decl.kind) kinds.emplace(decl.iri, *decl.kind);
  }

  auto is_class = [&](const std::string& iri) {
    auto it = kinds.find(iri);
    return it != kinds.end() && it->second == EntityKind::Class;
  };

  // Bare descriptions become instances when their rdf:type names a declared
  // class; anything else is skipped, matching the silent-skip rule.
  for (RdfDecl& decl : decls) {
    if (decl.kind) continue;
    bool typed = std::any_of(decl.types.begin(), decl.types.end(), is_class);
    if (typed) {
      decl.kind = EntityKind::Instance;
      kinds.emplace(decl.iri, EntityKind::Instance);
    }
  }

  Ontology ontology;
  ontology.uri = base;
  for (const RdfDecl& decl : decls) {
    if (!decl.kind) continue;
    ontology.entities.push_back(
        Entity{decl.iri, local_name_of(decl.iri), decl.labels, *decl.kind});
  }
  for (const RdfDecl& decl : decls) {
    if (!decl.kind) continue;
    if (*decl.kind == EntityKind::Class) {
      for (const std::string& parent : decl.parents) {
        if (is_class(parent)) ontology.subsumption.emplace(decl.iri, parent);
      }
    } else if (*decl.kind == EntityKind::Property) {
      for (const std::string& domain : decl.domains) {
        if (is_class(domain)) ontology.property_attachment.emplace(decl.iri, domain);
      }
    } else {
      for (const std::string& type : decl.types) {
        if (is_class(type)) ontology.instance_of.emplace(decl.iri, type);
      }
    }
  }

  ontology.validate();
  return ontology;
}

// ---------------------------------------------------------------------------
// Native line format
// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  bool quoted = false;
};

// Splits one line into whitespace-separated tokens; double quotes group a
// single token. '#' outside quotes starts a comment.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string_view::npos) {
        throw SyntaxError("unterminated quoted string", line_no);
      }
      tokens.push_back(Token{std::string(line.substr(i + 1, end - i - 1)), true});
      i = end + 1;
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
           line[end] != '#' && line[end] != '"') {
      ++end;
    }
    tokens.push_back(Token{std::string(line.substr(i, end - i)), false});
    i = end;
  }
  return tokens;
}

struct NativeDecl {
  EntityKind kind;
  std::string name;
  std::optional<std::string> label;
  int line;
};

struct NativeEdge {
  enum class Kind { Isa, InstanceOf, Domain } kind;
  std::string from;
  std::string to;
  int line;
};

}  // namespace

Ontology parse_native(std::string_view text, const std::optional<std::string>& base_override) {
  std::vector<NativeDecl> decls;
  std::vector<NativeEdge> edges;
  std::optional<std::string> declared_base;

  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize_line(line, line_no);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;
    if (tokens[0].quoted) throw SyntaxError("line starts with a quoted string", line_no);

    if (head == "base") {
      if (tokens.size() != 2 || tokens[1].quoted) {
        throw SyntaxError("expected: base <iri>", line_no);
      }
      if (declared_base) throw SyntaxError("duplicate base declaration", line_no);
      declared_base = tokens[1].text;
    } else if (head == "class") {
      if (tokens.size() != 2 && tokens.size() != 4) {
        throw SyntaxError("expected: class <name> [label \"<text>\"]", line_no);
      }
      NativeDecl decl{EntityKind::Class, tokens[1].text, std::nullopt, line_no};
      if (tokens.size() == 4) {
        if (tokens[2].text != "label" || tokens[2].quoted || !tokens[3].quoted) {
          throw SyntaxError("expected: class <name> [label \"<text>\"]", line_no);
        }
        decl.label = tokens[3].text;
      }
      decls.push_back(std::move(decl));
    } else if (head == "prop") {
      if (tokens.size() != 2 && tokens.size() != 4) {
        throw SyntaxError("expected: prop <name> [domain <class>]", line_no);
      }
      decls.push_back(NativeDecl{EntityKind::Property, tokens[1].text, std::nullopt, line_no});
      if (tokens.size() == 4) {
        if (tokens[2].text != "domain" || tokens[3].quoted) {
          throw SyntaxError("expected: prop <name> [domain <class>]", line_no);
        }
        edges.push_back(NativeEdge{NativeEdge::Kind::Domain, tokens[1].text, tokens[3].text,
                                   line_no});
      }
    } else if (head == "inst") {
      if (tokens.size() != 4 || tokens[2].text != "of" || tokens[1].quoted || tokens[3].quoted) {
        throw SyntaxError("expected: inst <name> of <class>", line_no);
      }
      decls.push_back(NativeDecl{EntityKind::Instance, tokens[1].text, std::nullopt, line_no});
      edges.push_back(
          NativeEdge{NativeEdge::Kind::InstanceOf, tokens[1].text, tokens[3].text, line_no});
    } else if (head == "isa") {
      if (tokens.size() != 3 || tokens[1].quoted || tokens[2].quoted) {
        throw SyntaxError("expected: isa <child> <parent>", line_no);
      }
      edges.push_back(NativeEdge{NativeEdge::Kind::Isa, tokens[1].text, tokens[2].text, line_no});
    } else {
      throw SyntaxError("unknown declaration '" + head + "'", line_no);
    }
  }

  std::string base;
  if (base_override) {
    base = strip_trailing_hash(*base_override);
  } else if (declared_base) {
    base = strip_trailing_hash(*declared_base);
  }
  if (base.empty()) {
    throw MissingOntologyUri("no base IRI: file has no base line and no override was given");
  }

  Ontology ontology;
  ontology.uri = base;
  std::map<std::string, EntityKind> kind_by_name;
  for (const NativeDecl& decl : decls) {
    if (!kind_by_name.emplace(decl.name, decl.kind).second) {
      throw DuplicateIri("duplicate declaration of '" + decl.name + "' at line " +
                         std::to_string(decl.line));
    }
    Entity entity{base + "#" + decl.name, decl.name, {}, decl.kind};
    if (decl.label) entity.labels.push_back(*decl.label);
    ontology.entities.push_back(std::move(entity));
  }

  auto resolve = [&](const std::string& name, EntityKind want, int line_no_) -> std::string {
    auto it = kind_by_name.find(name);
    if (it == kind_by_name.end()) {
      throw DanglingEdge("line " + std::to_string(line_no_) + ": edge references undeclared '" +
                         name + "'");
    }
    if (it->second != want) {
      throw DanglingEdge("line " + std::to_string(line_no_) + ": '" + name + "' is not a " +
                         std::string(to_string(want)));
    }
    return base + "#" + name;
  };

  for (const NativeEdge& edge : edges) {
    switch (edge.kind) {
      case NativeEdge::Kind::Isa:
        ontology.subsumption.emplace(resolve(edge.from, EntityKind::Class, edge.line),
                                     resolve(edge.to, EntityKind::Class, edge.line));
        break;
      case NativeEdge::Kind::InstanceOf:
        ontology.instance_of.emplace(resolve(edge.from, EntityKind::Instance, edge.line),
                                     resolve(edge.to, EntityKind::Class, edge.line));
        break;
      case NativeEdge::Kind::Domain:
        ontology.property_attachment.emplace(resolve(edge.from, EntityKind::Property, edge.line),
                                             resolve(edge.to, EntityKind::Class, edge.line));
        break;
    }
  }

  ontology.validate();
  return ontology;
}

}  // namespace ontomatch
