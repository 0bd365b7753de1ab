#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cogsem/element.hpp"
#include "cogsem/model.hpp"
#include "cogsem/operation.hpp"

namespace cogsem {

struct DenotationRef {
  std::string name;
  std::variant<ElementPtr, OperationDef> value;
  int ordinal = 0;  // position in the lexicon entry

  const Element* element() const noexcept {
    auto p = std::get_if<ElementPtr>(&value);
    return p ? p->get() : nullptr;
  }
  const OperationDef* operation() const noexcept { return std::get_if<OperationDef>(&value); }
};

struct LexiconEntry {
  std::string surface;
  std::vector<DenotationRef> denotations;
  bool empty_meaning = false;  // pure syntax, e.g. a comma
};

class UnknownToken : public std::out_of_range {
 public:
  explicit UnknownToken(std::string_view token)
      : std::out_of_range("unknown token '" + std::string(token) + "'") {}
};

class Lexicon {
 public:
  // Throws std::invalid_argument for an empty set on a non-syntax token.
  void add(LexiconEntry entry);
  const LexiconEntry* find(std::string_view surface) const;
  const std::map<std::string, LexiconEntry, std::less<>>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

std::vector<DenotationRef> lookup(const Lexicon& lex, std::string_view token);

struct Directive {
  std::optional<int> index;             // lexicon ordinal to keep
  std::optional<std::string> name;      // denotation name to keep
  std::optional<std::size_t> convention;  // position in the node's convention list
};

struct Context {
  std::vector<Composite> facts;
  std::optional<std::string> selected_world;
  std::optional<Segment> time_window;
  std::map<std::string, Region, std::less<>> region_hints;
  std::map<std::string, std::vector<OperationDef>, std::less<>> conventions;  // pattern -> Q_v
  std::map<std::string, Directive, std::less<>> directives;  // node id or token -> choice
  std::optional<ArgLevel> modal_mode;
  std::optional<double> most_threshold;
};

// Every observation inside the context facts must be actual.
void validate(const Context& ctx, const CognitiveModel& m);

// World/time/region filters first, then any directive keyed by node id or
// token. The result is a subset of `candidates` (relations and sets may be
// narrowed to their in-scope sequences/items). Throws std::invalid_argument
// when a directive names an absent candidate.
std::vector<DenotationRef> apply_context(const CognitiveModel& m, const Context& ctx,
                                         std::string_view node_id, std::string_view token,
                                         std::vector<DenotationRef> candidates);

enum class PhraseClass { content, function, mixed };

std::string_view to_string(PhraseClass c) noexcept;

// Throws std::invalid_argument on an empty set.
PhraseClass classify(std::span<const DenotationRef> denotations);

// The convention operation a node uses: the directive's pick, else the list
// head. Throws std::invalid_argument when no convention is configured.
const OperationDef& convention_for(const Context& ctx, std::string_view pattern,
                                   std::string_view node_id);

}  // namespace cogsem
