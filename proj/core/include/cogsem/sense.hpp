#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cogsem/element.hpp"
#include "cogsem/lexicon.hpp"
#include "cogsem/operation.hpp"

namespace cogsem {

struct Sense;
struct Explanation;
struct MeaningTriple;
using SensePtr = std::shared_ptr<const Sense>;
using ExplanationPtr = std::shared_ptr<const Explanation>;
using TriplePtr = std::shared_ptr<const MeaningTriple>;

// A binary operation with its first argument fixed.
struct PartialOp {
  OperationDef op;
  TriplePtr bound;
};

using Denotation = std::variant<Element, OperationDef, PartialOp>;

const Element* element_of(const Denotation& d) noexcept;
bool same_denotation(const Denotation& a, const Denotation& b);

// The operation tree that produces a denotation.
//  leaf:    the denotation chosen for a word.
//  apply:   (f, s_x, s_y) with f fully applied.
//  partial: (f, s_x, s_y) where f is binary and still waits for an argument.
// `args` lists the logical arguments in operation order: domain then relation
// for basic operations and quantifiers, left then right for connectives, the
// single argument for unary operations. Modal senses carry the clause's
// meaning set instead.
struct Sense {
  enum class Kind { leaf, apply, partial };

  Kind kind = Kind::leaf;
  DenotationRef leaf;
  OperationDef op;
  ArgLevel level = ArgLevel::denotation;
  SensePtr modifier;
  SensePtr head;
  std::vector<SensePtr> args;
  std::vector<TriplePtr> meanings;
  // When a fully applied node came from a partial head, the node whose
  // argument was fixed first (used to rebuild argument order).
  bool from_partial = false;

  // Canonical identity text. Computed once by seal() after construction.
  const std::string& key() const noexcept { return key_; }
  void seal();

 private:
  std::string key_;
};

SensePtr make_leaf_sense(DenotationRef ref);

// Explanation tree r_v = (r_x, r_y, (v, s_v)); a leaf is (token, sense).
struct Explanation {
  std::string node_id;
  std::string token;  // leaves
  SensePtr sense;
  ExplanationPtr modifier;
  ExplanationPtr head;

  std::string key() const;
};

struct MeaningTriple {
  Denotation denotation;
  SensePtr sense;
  ExplanationPtr explanation;
  // Leaf choices below this node: token -> denotation name. `consistent`
  // is false when one token was given two different denotations.
  std::map<std::string, std::string> choices;
  bool consistent = true;
};

}  // namespace cogsem
