#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cogsem/element.hpp"
#include "cogsem/lexicon.hpp"
#include "cogsem/model.hpp"
#include "cogsem/sense.hpp"
#include "cogsem/tree.hpp"

namespace cogsem {

class InterpretError : public std::runtime_error {
 public:
  InterpretError(std::string node_id, const std::string& what)
      : std::runtime_error(node_id + ": " + what), node_id_(std::move(node_id)) {}
  const std::string& node_id() const noexcept { return node_id_; }

 private:
  std::string node_id_;
};

// Keeps the sequences b of R (a set is a unary relation) with
//   weak:   every a in A overlaps b_i
//   strong: every a in A is contained in b_i
//   exact:  A equals b_i (a singleton A is compared as its element)
// The result has R's kind. Throws std::invalid_argument when i is out of
// range or weak/strong meet something other than composite observations.
Element apply_basic(Match match, std::span<const Element> a, int i, const Element& r);

// As apply_basic with "some a in A" in place of "every a in A".
Element apply_quantifier(Match match, std::span<const Element> a, int i, const Element& r);

// Applies a fully saturated operation to denotations given in logical
// argument order. Modal operations are not handled here. Returns nullopt
// (and fills `why`) when the operation is undefined on the arguments.
std::optional<Element> apply_operation(const OperationDef& op, std::span<const Element* const> args,
                                       const CognitiveModel& m, std::string* why = nullptr);

struct Interpretation {
  DepTree tree;                     // with ids assigned
  std::vector<std::string> order;   // preorder node ids
  std::map<std::string, std::vector<TriplePtr>, std::less<>> triples;
  std::map<std::string, std::size_t, std::less<>> candidates;  // leaves, after context
  std::set<std::string, std::less<>> clause_nodes;  // inside a modal's clause

  const std::vector<TriplePtr>& at(std::string_view node_id) const;
  const std::vector<TriplePtr>& root() const { return at(tree.id); }
  // Nodes outside modal clauses with more than one triple. Pure-syntax
  // nodes carry none and do not count.
  std::vector<std::string> ambiguous_nodes() const;
  bool effective() const { return ambiguous_nodes().empty(); }
};

// Recursive interpretation of every node. Throws InterpretError for a node
// with no meaning at all, and UnknownToken for a word missing from `lex`.
Interpretation interpret(DepTree tree, const Lexicon& lex, const Context& ctx, const CognitiveModel& m);

// The abstract-string element registered for a quoted leaf.
TriplePtr quote(const DepTree& node, const CognitiveModel& m);

// Recomputes the denotation a sense implies.
Denotation evaluate(const Sense& s, const CognitiveModel& m);

// (f, sigma(x_i), formula) with f the basic operation of the given match.
// Throws std::invalid_argument when the assigned value is empty.
SensePtr instantiate(const SensePtr& formula, int var, const Element& value, Match match,
                     const CognitiveModel& m);

}  // namespace cogsem
