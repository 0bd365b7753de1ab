#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cogsem {

// A binary dependent tree: a leaf carries a word or idiom, an internal node
// a modifier (first child) and a head (second child).
struct DepTree {
  std::string id;
  std::string token;    // leaves
  bool quoted = false;  // direct speech: denotes the string itself
  std::string pattern;  // convention slot for internal nodes
  std::optional<bool> sentence;  // root only: false declares a normal phrase
  std::vector<DepTree> children;

  static DepTree leaf(std::string token, bool quoted = false);
  static DepTree node(DepTree modifier, DepTree head, std::string pattern = {});

  bool is_leaf() const noexcept { return children.empty(); }
  const DepTree& modifier() const { return children.at(0); }
  const DepTree& head() const { return children.at(1); }
};

// Gives every node without an id a preorder id "n<k>". Throws
// std::invalid_argument on duplicate ids or non-binary nodes.
void assign_ids(DepTree& t);

// Leaf tokens in order, space separated.
std::string surface(const DepTree& t);

}  // namespace cogsem
