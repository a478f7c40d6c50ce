#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontomatch/errors.hpp"

namespace ontomatch {

enum class EntityKind { Class, Property, Instance };

std::string_view to_string(EntityKind kind);

/// A named element of an ontology. Identity is the IRI; labels are advisory
/// display text. A sub-concept is simply a Class with a subsumption parent.
struct Entity {
  std::string iri;
  std::string local_name;
  std::vector<std::string> labels;
  EntityKind kind = EntityKind::Class;

  bool operator==(const Entity&) const = default;
};

using EdgeSet = std::set<std::pair<std::string, std::string>>;

/// In-memory graph of one parsed knowledge source. Immutable after parsing;
/// safe to share across concurrent readers.
struct Ontology {
  std::string uri;
  std::vector<Entity> entities;  // insertion order from the source file
  EdgeSet subsumption;           // (child class IRI, parent class IRI)
  EdgeSet instance_of;           // (instance IRI, class IRI)
  EdgeSet property_attachment;   // (property IRI, domain class IRI)

  const Entity* find(std::string_view iri) const;

  /// Checks the structural invariants: unique IRIs, every edge endpoint
  /// declared, edges connecting the right kinds. Throws std::logic_error on
  /// violation; both parsers run this before returning.
  void validate() const;

  bool operator==(const Ontology&) const = default;
};

/// Reads the recognized RDF/XML subset: owl:Class, owl:ObjectProperty,
/// owl:DatatypeProperty, owl:NamedIndividual, rdfs:subClassOf (resource
/// reference form), rdfs:label, rdfs:domain, rdf:about/rdf:ID and rdf:type
/// on description nodes. Everything else is silently skipped. The base IRI
/// comes from xml:base or the override.
Ontology parse_rdfxml(std::string_view document,
                      const std::optional<std::string>& base_override = {});

/// Reads the native line format: `base <iri>`, `class <name> [label "<text>"]`,
/// `prop <name> [domain <class>]`, `inst <name> of <class>`, `isa <child>
/// <parent>`. '#' starts a comment.
Ontology parse_native(std::string_view text,
                      const std::optional<std::string>& base_override = {});

/// Lowercases, splits camelCase boundaries, turns '_', '-' and '.' into
/// spaces, trims and collapses whitespace. Idempotent.
std::string normalize_label(std::string_view raw);

/// Normalized first label when present, otherwise the normalized local name.
std::string display_name(const Entity& entity);

std::vector<Entity> entities_by_kind(const Ontology& ontology, EntityKind kind);

/// Fragment after '#', else the last '/' segment, else the whole IRI.
std::string local_name_of(std::string_view iri);

}  // namespace ontomatch
