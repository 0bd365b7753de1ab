#include "cogsem/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogsem {

namespace {

template <class T>
void normalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::strong_ordering compare_items(const std::vector<Element>& a, const std::vector<Element>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Element Element::composite(Composite c) { return Element{std::move(c)}; }

Element Element::set(std::vector<Element> items) {
  normalize(items);
  return Element{ElementSet{std::move(items)}};
}

Element Element::sequence(std::vector<Element> items) { return Element{ElementSeq{std::move(items)}}; }

Element Element::relation(std::size_t arity, std::vector<ElementSeq> seqs, RelationInfo info) {
  for (const auto& s : seqs)
    if (s.items.size() != arity)
      throw std::invalid_argument("relation sequence of length " + std::to_string(s.items.size()) +
                                  " in a relation of arity " + std::to_string(arity));
  normalize(seqs);
  return Element{Relation{arity, std::move(seqs), info}};
}

Element Element::string(std::string text) { return Element{AbstractString{std::move(text)}}; }

bool Element::is_empty() const noexcept {
  switch (kind()) {
    case Kind::composite: return as_composite()->empty();
    case Kind::set: return as_set()->items.empty();
    case Kind::sequence: return as_sequence()->items.empty();
    case Kind::relation: return as_relation()->seqs.empty();
    case Kind::string: return false;
  }
  return false;
}

bool operator==(const ElementSeq& a, const ElementSeq& b) { return a.items == b.items; }

std::strong_ordering operator<=>(const ElementSeq& a, const ElementSeq& b) {
  return compare_items(a.items, b.items);
}

bool operator==(const Element& a, const Element& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Element::Kind::composite:
      return *a.as_composite() <=> *b.as_composite();
    case Element::Kind::set:
      return compare_items(a.as_set()->items, b.as_set()->items);
    case Element::Kind::sequence:
      return compare_items(a.as_sequence()->items, b.as_sequence()->items);
    case Element::Kind::relation: {
      const auto& x = *a.as_relation();
      const auto& y = *b.as_relation();
      if (auto c = x.arity <=> y.arity; c != 0) return c;
      return std::lexicographical_compare_three_way(x.seqs.begin(), x.seqs.end(), y.seqs.begin(),
                                                    y.seqs.end());
    }
    case Element::Kind::string:
      return a.as_string()->text.compare(b.as_string()->text) <=> 0;
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(Element::Kind k) noexcept {
  switch (k) {
    case Element::Kind::composite: return "composite";
    case Element::Kind::set: return "set";
    case Element::Kind::sequence: return "sequence";
    case Element::Kind::relation: return "relation";
    case Element::Kind::string: return "string";
  }
  return "?";
}

Composite observations_of(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::composite:
      return *e.as_composite();
    case Element::Kind::set:
    case Element::Kind::sequence: {
      const auto& items = e.kind() == Element::Kind::set ? e.as_set()->items : e.as_sequence()->items;
      Composite out;
      for (const auto& i : items) out = out.unite(observations_of(i));
      return out;
    }
    case Element::Kind::relation: {
      Composite out;
      for (const auto& s : e.as_relation()->seqs)
        for (const auto& i : s.items) out = out.unite(observations_of(i));
      return out;
    }
    case Element::Kind::string:
      return {};
  }
  return {};
}

Relation relation_view(const Element& e) {
  if (const auto* r = e.as_relation()) return *r;
  if (const auto* s = e.as_set()) {
    Relation out;
    out.arity = 1;
    out.seqs.reserve(s->items.size());
    for (const auto& i : s->items) out.seqs.push_back(ElementSeq{{i}});
    return out;
  }
  throw std::invalid_argument("a " + std::string(to_string(e.kind())) + " is not a relation");
}

std::vector<Element> domain_items(const Element& e) {
  if (e.is_empty()) return {};
  if (const auto* s = e.as_set()) return s->items;
  return {e};
}

}  // namespace cogsem
