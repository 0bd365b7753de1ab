#pragma once

#include <compare>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cogsem/observation.hpp"

namespace cogsem {

struct Element;

// Sorted, duplicate-free.
struct ElementSet {
  std::vector<Element> items;
};

struct ElementSeq {
  std::vector<Element> items;
};

// How propositions built over a relation are decided.
enum class TruthKind { observational, set, mental };
// What an M-relation's second position holds.
enum class ProductKind { denotation, sense, explanation, string };

// Annotations carried by a relation. They are not part of its identity.
struct RelationInfo {
  TruthKind truth = TruthKind::observational;
  ProductKind product = ProductKind::denotation;
  bool knowledge = false;
};

// A set of equal-length sequences, sorted and duplicate-free.
struct Relation {
  std::size_t arity = 0;
  std::vector<ElementSeq> seqs;
  RelationInfo info;
};

struct AbstractString {
  std::string text;
};

struct Element {
  enum class Kind { composite, set, sequence, relation, string };

  std::variant<Composite, ElementSet, ElementSeq, Relation, AbstractString> v;

  static Element composite(Composite c);
  static Element set(std::vector<Element> items);
  static Element sequence(std::vector<Element> items);
  static Element relation(std::size_t arity, std::vector<ElementSeq> seqs, RelationInfo info = {});
  static Element string(std::string text);

  Kind kind() const noexcept { return static_cast<Kind>(v.index()); }
  bool is_empty() const noexcept;

  const Composite* as_composite() const noexcept { return std::get_if<Composite>(&v); }
  const ElementSet* as_set() const noexcept { return std::get_if<ElementSet>(&v); }
  const ElementSeq* as_sequence() const noexcept { return std::get_if<ElementSeq>(&v); }
  const Relation* as_relation() const noexcept { return std::get_if<Relation>(&v); }
  const AbstractString* as_string() const noexcept { return std::get_if<AbstractString>(&v); }
};

bool operator==(const Element& a, const Element& b);
std::strong_ordering operator<=>(const Element& a, const Element& b);
bool operator==(const ElementSeq& a, const ElementSeq& b);
std::strong_ordering operator<=>(const ElementSeq& a, const ElementSeq& b);

std::string_view to_string(Element::Kind k) noexcept;

// Leibniz's Law on the model: the same set (recursively) means the same thing.
inline bool identical(const Element& a, const Element& b) { return a == b; }

// Every primitive observation reachable from e.
Composite observations_of(const Element& e);

// Sets and relations viewed as relations; a set is a unary relation.
// Throws std::invalid_argument for other kinds.
Relation relation_view(const Element& e);

// The members a domain argument ranges over: a set's items, otherwise the
// element itself (a singleton), or nothing when the element is empty.
std::vector<Element> domain_items(const Element& e);

using ElementPtr = std::shared_ptr<const Element>;

}  // namespace cogsem
