#include "cogsem/interp.hpp"

#include <algorithm>
#include <functional>

namespace cogsem {

namespace {

constexpr std::size_t kMaxTriples = 20000;

const Composite& composite_arg(const Element& e, Match match) {
  const Composite* c = e.as_composite();
  if (!c)
    throw std::invalid_argument(std::string(to_string(match)) +
                                " match needs composite observations, got a " +
                                std::string(to_string(e.kind())));
  return *c;
}

bool matches(Match match, const Element& a, const Element& b) {
  switch (match) {
    case Match::weak: return composite_arg(a, match).intersects(composite_arg(b, match));
    case Match::strong: return composite_arg(a, match).subset_of(composite_arg(b, match));
    case Match::exact: return a == b;
  }
  return false;
}

template <class Keep>
Element restrict(const Element& r, int i, Keep keep) {
  Relation rel = relation_view(r);
  if (i < 1 || static_cast<std::size_t>(i) > rel.arity)
    throw std::invalid_argument("variable x" + std::to_string(i) + " outside a relation of arity " +
                                std::to_string(rel.arity));
  std::vector<ElementSeq> kept;
  for (auto& s : rel.seqs)
    if (keep(s.items[i - 1])) kept.push_back(std::move(s));
  if (r.as_set()) {
    std::vector<Element> items;
    for (auto& s : kept) items.push_back(std::move(s.items.front()));
    return Element::set(std::move(items));
  }
  return Element::relation(rel.arity, std::move(kept), rel.info);
}

}  // namespace

Element apply_basic(Match match, std::span<const Element> a, int i, const Element& r) {
  if (match == Match::exact) {
    Element whole = a.size() == 1 ? a.front() : Element::set({a.begin(), a.end()});
    return restrict(r, i, [&](const Element& b) { return b == whole; });
  }
  return restrict(r, i, [&](const Element& b) {
    return std::all_of(a.begin(), a.end(), [&](const Element& x) { return matches(match, x, b); });
  });
}

Element apply_quantifier(Match match, std::span<const Element> a, int i, const Element& r) {
  return restrict(r, i, [&](const Element& b) {
    return std::any_of(a.begin(), a.end(), [&](const Element& x) { return matches(match, x, b); });
  });
}

namespace {

Element keep_satisfying(const Element& e, const Predicate& p, const CognitiveModel& m) {
  auto all_hold = [&](const Element& x) {
    auto obs = observations_of(x);
    return std::all_of(obs.begin(), obs.end(), [&](ObsId id) { return p.holds(m.observations()[id]); });
  };
  if (const auto* c = e.as_composite()) return Element::composite(filter(m.observations(), *c, p));
  if (const auto* s = e.as_set()) {
    std::vector<Element> kept;
    for (const auto& x : s->items)
      if (all_hold(x)) kept.push_back(x);
    return Element::set(std::move(kept));
  }
  if (const auto* r = e.as_relation()) {
    std::vector<ElementSeq> kept;
    for (const auto& s : r->seqs)
      if (std::all_of(s.items.begin(), s.items.end(), all_hold)) kept.push_back(s);
    return Element::relation(r->arity, std::move(kept), r->info);
  }
  return e;
}

}  // namespace

std::optional<Element> apply_operation(const OperationDef& op, std::span<const Element* const> args,
                                       const CognitiveModel& m, std::string* why) {
  auto fail = [&](std::string msg) -> std::optional<Element> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  if (static_cast<int>(args.size()) != op.arity())
    return fail(op.signature() + " takes " + std::to_string(op.arity()) + " arguments");
  try {
    if (const auto* b = op.basic()) {
      auto dom = domain_items(*args[0]);
      return apply_basic(b->match, dom, b->var, *args[1]);
    }
    if (const auto* q = op.quantifier()) {
      auto dom = domain_items(*args[0]);
      return apply_quantifier(q->match, dom, q->var, *args[1]);
    }
    if (const auto* c = op.connective()) {
      if (c->table == ConnectiveId::negation) return Element::sequence({*args[0]});
      if (!c->associated_relation) return Element::sequence({*args[0], *args[1]});
      const Element* h = m.element(*c->associated_relation);
      if (!h || !h->as_relation() || h->as_relation()->arity != 2)
        return fail("associated relation '" + *c->associated_relation + "' is not a binary relation");
      const Relation& rel = *h->as_relation();
      std::vector<ElementSeq> kept;
      for (const auto& s : rel.seqs)
        if (s.items[0] == *args[0] && s.items[1] == *args[1]) kept.push_back(s);
      return Element::relation(2, std::move(kept), rel.info);
    }
    if (const auto* x = op.context()) return keep_satisfying(*args[0], x->keep, m);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  return fail(op.signature() + " cannot be applied here");
}

// ---------------------------------------------------------------------------

const std::vector<TriplePtr>& Interpretation::at(std::string_view node_id) const {
  auto it = triples.find(node_id);
  if (it == triples.end()) throw std::out_of_range("no node '" + std::string(node_id) + "'");
  return it->second;
}

std::vector<std::string> Interpretation::ambiguous_nodes() const {
  std::vector<std::string> out;
  for (const auto& id : order)
    if (!clause_nodes.count(id) && at(id).size() > 1) out.push_back(id);
  return out;
}

TriplePtr quote(const DepTree& node, const CognitiveModel& m) {
  for (const auto& [name, e] : m.elements()) {
    const auto* s = e.as_string();
    if (!s || s->text != node.token) continue;
    auto ref = DenotationRef{name, std::make_shared<const Element>(e), 0};
    auto t = std::make_shared<MeaningTriple>();
    t->denotation = e;
    t->sense = make_leaf_sense(ref);
    auto ex = std::make_shared<Explanation>();
    ex->node_id = node.id;
    ex->token = "\"" + node.token + "\"";
    ex->sense = t->sense;
    t->explanation = ex;
    t->choices.emplace(ex->token, name);
    return t;
  }
  throw InterpretError(node.id, "quoted string \"" + node.token + "\" is not a registered abstract string");
}

namespace {

class Interpreter {
 public:
  Interpreter(const Lexicon& lex, const Context& ctx, const CognitiveModel& m, Interpretation& out)
      : lex_(lex), ctx_(ctx), m_(m), out_(out) {}

  // Returns nullopt for nodes with empty (pure syntax) meaning.
  std::optional<std::vector<TriplePtr>> run(const DepTree& t, bool in_clause) {
    if (in_clause) out_.clause_nodes.insert(t.id);
    std::optional<std::vector<TriplePtr>> result =
        t.is_leaf() ? leaf(t) : internal(t, in_clause);
    out_.triples[t.id] = result ? *result : std::vector<TriplePtr>{};
    return result;
  }

 private:
  std::optional<std::vector<TriplePtr>> leaf(const DepTree& t) {
    if (t.quoted) {
      out_.candidates[t.id] = 1;
      return std::vector<TriplePtr>{quote(t, m_)};
    }
    const LexiconEntry* entry = lex_.find(t.token);
    if (!entry) throw UnknownToken(t.token);
    if (entry->empty_meaning && entry->denotations.empty()) return std::nullopt;

    auto cands = apply_context(m_, ctx_, t.id, t.token, lookup(lex_, t.token));
    out_.candidates[t.id] = cands.size();
    if (cands.empty()) throw InterpretError(t.id, "no denotation of '" + t.token + "' survives the context");

    std::vector<TriplePtr> out;
    for (auto& c : cands) {
      auto tr = std::make_shared<MeaningTriple>();
      if (const Element* e = c.element()) tr->denotation = *e;
      else tr->denotation = *c.operation();
      tr->choices.emplace(t.token, c.name);
      tr->sense = make_leaf_sense(std::move(c));
      auto ex = std::make_shared<Explanation>();
      ex->node_id = t.id;
      ex->token = t.token;
      ex->sense = tr->sense;
      tr->explanation = ex;
      out.push_back(std::move(tr));
    }
    return out;
  }

  static bool is_modal(const TriplePtr& y) {
    const auto* op = std::get_if<OperationDef>(&y->denotation);
    return op && op->modal();
  }

  std::optional<std::vector<TriplePtr>> internal(const DepTree& t, bool in_clause) {
    auto ys = run(t.head(), in_clause);
    bool modal_head = ys && std::any_of(ys->begin(), ys->end(), is_modal);
    auto xs = run(t.modifier(), in_clause || modal_head);
    if (!xs) return ys;
    if (!ys) return xs;

    std::vector<TriplePtr> out;
    std::string why;
    for (const auto& y : *ys) {
      if (is_modal(y)) {
        out.push_back(modal(t, *xs, y));
        continue;
      }
      for (const auto& x : *xs) {
        if (auto v = combine(t, x, y, why)) out.push_back(std::move(v));
        if (out.size() > kMaxTriples) throw InterpretError(t.id, "too many readings");
      }
    }
    if (out.empty())
      throw InterpretError(t.id, "uninterpretable node" + (why.empty() ? "" : " (" + why + ")"));
    return out;
  }

  static std::shared_ptr<MeaningTriple> join(const DepTree& t, const TriplePtr& x, const TriplePtr& y,
                                             std::shared_ptr<Sense> s) {
    s->seal();
    auto v = std::make_shared<MeaningTriple>();
    v->sense = s;
    auto ex = std::make_shared<Explanation>();
    ex->node_id = t.id;
    ex->sense = s;
    ex->modifier = x->explanation;
    ex->head = y->explanation;
    v->explanation = ex;
    v->choices = y->choices;
    v->consistent = x->consistent && y->consistent;
    for (const auto& [tok, name] : x->choices) {
      auto [it, fresh] = v->choices.emplace(tok, name);
      if (!fresh && it->second != name) v->consistent = false;
    }
    return v;
  }

  TriplePtr combine(const DepTree& t, const TriplePtr& x, const TriplePtr& y, std::string& why) {
    const Element* ex = element_of(x->denotation);

    if (const auto* op = std::get_if<OperationDef>(&y->denotation)) {
      if (!ex) {
        why = "operation argument is not a domain element";
        return nullptr;
      }
      auto s = std::make_shared<Sense>();
      s->op = *op;
      s->level = op->level;
      s->modifier = x->sense;
      s->head = y->sense;
      s->args = {x->sense};
      if (op->arity() == 2) {  // Case II
        s->kind = Sense::Kind::partial;
        auto v = join(t, x, y, s);
        v->denotation = PartialOp{*op, x};
        return v;
      }
      const Element* args[] = {ex};  // Case I, unary
      auto e = apply_operation(*op, args, m_, &why);
      if (!e) return nullptr;
      s->kind = Sense::Kind::apply;
      auto v = join(t, x, y, s);
      v->denotation = std::move(*e);
      return v;
    }

    if (const auto* p = std::get_if<PartialOp>(&y->denotation)) {  // Case I via a partial head
      const Element* first = element_of(p->bound->denotation);
      if (!ex || !first) {
        why = "operation argument is not a domain element";
        return nullptr;
      }
      const Element* args[] = {first, ex};
      auto e = apply_operation(p->op, args, m_, &why);
      if (!e) return nullptr;
      auto s = std::make_shared<Sense>();
      s->kind = Sense::Kind::apply;
      s->op = p->op;
      s->level = p->op.level;
      s->modifier = x->sense;
      s->head = y->sense;
      s->args = {p->bound->sense, x->sense};
      s->from_partial = true;
      auto v = join(t, x, y, s);
      v->denotation = std::move(*e);
      return v;
    }

    // Case III: both content, the operation comes from convention.
    if (!ex) {
      why = "modifier denotes an operation but the head is content";
      return nullptr;
    }
    const OperationDef& f = convention_for(ctx_, t.pattern, t.id);
    const Element* args[] = {ex, &std::get<Element>(y->denotation)};
    auto e = apply_operation(f, args, m_, &why);
    if (!e) return nullptr;
    auto s = std::make_shared<Sense>();
    s->kind = Sense::Kind::apply;
    s->op = f;
    s->level = f.level;
    s->modifier = x->sense;
    s->head = y->sense;
    s->args = {x->sense, y->sense};
    auto v = join(t, x, y, s);
    v->denotation = std::move(*e);
    return v;
  }

  TriplePtr modal(const DepTree& t, const std::vector<TriplePtr>& clause, const TriplePtr& y) {
    std::vector<TriplePtr> meanings;
    for (const auto& c : clause)
      if (c->consistent) meanings.push_back(c);
    if (meanings.empty()) throw InterpretError(t.modifier().id, "clause uninterpretable");

    OperationDef op = std::get<OperationDef>(y->denotation);
    if (ctx_.modal_mode) std::get<ModalOp>(op.kind).mode = *ctx_.modal_mode;

    auto s = std::make_shared<Sense>();
    s->kind = Sense::Kind::apply;
    s->op = op;
    s->level = std::get<ModalOp>(op.kind).mode;
    s->head = y->sense;
    s->meanings = meanings;
    s->seal();

    std::vector<Element> dens;
    for (const auto& c : meanings)
      if (const Element* e = element_of(c->denotation)) dens.push_back(*e);

    auto v = std::make_shared<MeaningTriple>();
    v->denotation = Element::set(std::move(dens));
    v->sense = s;
    auto clause_ex = std::make_shared<Explanation>();
    clause_ex->node_id = t.modifier().id;
    clause_ex->token = surface(t.modifier());
    clause_ex->sense = s;
    auto ex = std::make_shared<Explanation>();
    ex->node_id = t.id;
    ex->sense = s;
    ex->modifier = clause_ex;
    ex->head = y->explanation;
    v->explanation = ex;
    v->choices = y->choices;
    return v;
  }

  const Lexicon& lex_;
  const Context& ctx_;
  const CognitiveModel& m_;
  Interpretation& out_;
};

}  // namespace

Interpretation interpret(DepTree tree, const Lexicon& lex, const Context& ctx, const CognitiveModel& m) {
  assign_ids(tree);
  Interpretation out;
  out.tree = std::move(tree);
  Interpreter(lex, ctx, m, out).run(out.tree, false);
  std::function<void(const DepTree&)> walk = [&](const DepTree& t) {
    out.order.push_back(t.id);
    for (const auto& c : t.children) walk(c);
  };
  walk(out.tree);
  if (out.root().empty()) throw InterpretError(out.tree.id, "phrase has empty meaning");
  return out;
}

// ---------------------------------------------------------------------------

Denotation evaluate(const Sense& s, const CognitiveModel& m) {
  if (s.kind == Sense::Kind::leaf) {
    if (const Element* e = s.leaf.element()) return *e;
    return *s.leaf.operation();
  }
  if (s.kind == Sense::Kind::partial) {
    auto bound = std::make_shared<MeaningTriple>();
    bound->denotation = evaluate(*s.args.at(0), m);
    bound->sense = s.args.at(0);
    return PartialOp{s.op, bound};
  }
  if (s.op.modal()) {
    std::vector<Element> dens;
    for (const auto& c : s.meanings) {
      auto d = evaluate(*c->sense, m);
      if (const Element* e = element_of(d)) dens.push_back(*e);
    }
    return Element::set(std::move(dens));
  }
  std::vector<Denotation> vals;
  for (const auto& a : s.args) vals.push_back(evaluate(*a, m));
  std::vector<const Element*> args;
  for (const auto& v : vals) {
    const Element* e = element_of(v);
    if (!e) throw std::logic_error("sense argument does not denote an element: " + s.key());
    args.push_back(e);
  }
  std::string why;
  auto e = apply_operation(s.op, args, m, &why);
  if (!e) throw std::logic_error("sense does not evaluate: " + why);
  return std::move(*e);
}

SensePtr instantiate(const SensePtr& formula, int var, const Element& value, Match match,
                     const CognitiveModel& m) {
  if (value.is_empty()) throw std::invalid_argument("value assignment to an empty element");
  DenotationRef ref{m.label(value), std::make_shared<const Element>(value), 0};
  auto s = std::make_shared<Sense>();
  s->kind = Sense::Kind::apply;
  s->op = OperationDef{"f-basic", BasicOp{match, var}, ArgLevel::denotation};
  s->modifier = make_leaf_sense(std::move(ref));
  s->head = formula;
  s->args = {s->modifier, formula};
  s->seal();
  return s;
}

}  // namespace cogsem
