#include "cogsem/tree.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace cogsem {

DepTree DepTree::leaf(std::string token, bool quoted) {
  DepTree t;
  t.token = std::move(token);
  t.quoted = quoted;
  return t;
}

DepTree DepTree::node(DepTree modifier, DepTree head, std::string pattern) {
  DepTree t;
  t.pattern = std::move(pattern);
  t.children.push_back(std::move(modifier));
  t.children.push_back(std::move(head));
  return t;
}

void assign_ids(DepTree& root) {
  std::set<std::string> used;
  std::function<void(const DepTree&)> collect = [&](const DepTree& t) {
    if (t.children.size() != 0 && t.children.size() != 2)
      throw std::invalid_argument("tree node with " + std::to_string(t.children.size()) +
                                  " children");
    if (t.is_leaf() && t.token.empty()) throw std::invalid_argument("leaf without a token");
    if (!t.id.empty() && !used.insert(t.id).second)
      throw std::invalid_argument("duplicate node id '" + t.id + "'");
    for (const auto& c : t.children) collect(c);
  };
  collect(root);

  int next = 0;
  std::function<void(DepTree&)> name = [&](DepTree& t) {
    if (t.id.empty()) {
      std::string id;
      do id = "n" + std::to_string(next++);
      while (used.count(id));
      used.insert(id);
      t.id = id;
    }
    for (auto& c : t.children) name(c);
  };
  name(root);
}

std::string surface(const DepTree& t) {
  if (t.is_leaf()) return t.quoted ? "\"" + t.token + "\"" : t.token;
  return surface(t.modifier()) + " " + surface(t.head());
}

}  // namespace cogsem
