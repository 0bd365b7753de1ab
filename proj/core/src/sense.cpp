#include "cogsem/sense.hpp"

#include <set>

namespace cogsem {

const Element* element_of(const Denotation& d) noexcept { return std::get_if<Element>(&d); }

bool same_denotation(const Denotation& a, const Denotation& b) {
  if (a.index() != b.index()) return false;
  if (auto x = std::get_if<Element>(&a)) return *x == std::get<Element>(b);
  if (auto x = std::get_if<OperationDef>(&a)) return x->signature() == std::get<OperationDef>(b).signature();
  const auto& p = std::get<PartialOp>(a);
  const auto& q = std::get<PartialOp>(b);
  return p.op.signature() == q.op.signature() && p.bound && q.bound &&
         p.bound->sense->key() == q.bound->sense->key();
}

SensePtr make_leaf_sense(DenotationRef ref) {
  auto s = std::make_shared<Sense>();
  s->kind = Sense::Kind::leaf;
  s->leaf = std::move(ref);
  s->seal();
  return s;
}

void Sense::seal() {
  if (kind == Kind::leaf) {
    const auto* op = leaf.operation();
    key_ = op ? op->signature() : leaf.name;
    return;
  }
  std::string out = "(" + op.signature();
  if (kind == Kind::partial) out += "/_";
  if (op.modal()) {
    std::set<std::string> keys;
    for (const auto& m : meanings) keys.insert(m->sense->key());
    out += " {";
    bool first = true;
    for (const auto& k : keys) {
      if (!first) out += " | ";
      out += k;
      first = false;
    }
    out += "}";
  } else if (modifier) {
    switch (level) {
      case ArgLevel::denotation: out += " " + modifier->key(); break;
      case ArgLevel::sense: out += " (" + modifier->key() + ")"; break;
      case ArgLevel::explanation: out += " [" + modifier->key() + "]"; break;
    }
  }
  if (head) out += " " + head->key();
  key_ = out + ")";
}

std::string Explanation::key() const {
  if (!modifier) return "(" + token + ", " + sense->key() + ")";
  return "(" + modifier->key() + ", " + head->key() + ", (" + node_id + ", " + sense->key() + "))";
}

}  // namespace cogsem
