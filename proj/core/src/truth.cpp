#include "cogsem/truth.hpp"

#include <algorithm>
#include <set>

namespace cogsem {

std::string_view to_string(PropositionKind k) noexcept {
  switch (k) {
    case PropositionKind::atomic_I: return "atomic-I";
    case PropositionKind::atomic_II: return "atomic-II";
    case PropositionKind::atomic_M: return "atomic-M";
    case PropositionKind::quantified: return "quantified";
    case PropositionKind::connective: return "connective";
    case PropositionKind::modal: return "modal";
    case PropositionKind::normal_phrase: return "normal-phrase";
  }
  return "?";
}

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

constexpr int kMaxDepth = 256;

struct DepthGuard {
  int& d;
  explicit DepthGuard(int& depth) : d(depth) {
    if (++d > kMaxDepth) {
      --d;
      throw EvaluationError("evaluation nested too deeply");
    }
  }
  ~DepthGuard() { --d; }
};

bool in_model(const Element& e, const CognitiveModel& m) {
  if (e.as_string()) return m.name_of(e).has_value();
  auto items = [&](const std::vector<Element>& xs) {
    return std::all_of(xs.begin(), xs.end(), [&](const Element& x) { return in_model(x, m); });
  };
  if (const auto* c = e.as_composite())
    return std::all_of(c->begin(), c->end(), [&](ObsId id) { return id < m.observations().size(); });
  if (const auto* s = e.as_set()) return items(s->items);
  if (const auto* q = e.as_sequence()) return items(q->items);
  const auto& seqs = e.as_relation()->seqs;
  return std::all_of(seqs.begin(), seqs.end(), [&](const ElementSeq& s) { return items(s.items); });
}

}  // namespace

NotEffective::NotEffective(std::vector<std::string> nodes)
    : std::runtime_error("interpretation is not effective; ambiguous nodes: " + join_ids(nodes)),
      nodes_(std::move(nodes)) {}

void SenseRegistry::add(const SensePtr& s, const Denotation& d) {
  const Element* e = element_of(d);
  if (!e) return;
  std::lock_guard lock(mu_);
  by_key_.try_emplace(s->key(), s, *e);
}

std::vector<SensePtr> SenseRegistry::implying(const Element& e) const {
  std::lock_guard lock(mu_);
  std::vector<SensePtr> out;
  for (const auto& [key, entry] : by_key_)
    if (entry.second == e) out.push_back(entry.first);
  return out;
}

std::size_t SenseRegistry::size() const {
  std::lock_guard lock(mu_);
  return by_key_.size();
}

Evaluator::Evaluator(const CognitiveModel& m, EvalOptions opts, const SenseRegistry* registry,
                     const Interpretation* interp)
    : m_(m), opts_(opts), registry_(registry), interp_(interp), verifier_(m.observations()) {}

std::optional<Evaluator::Chain> Evaluator::chain_of(const Sense& s) const {
  Chain c;
  const Sense* cur = &s;
  while (cur->kind == Sense::Kind::apply) {
    const OperationDef& op = cur->op;
    if (op.basic() || op.quantifier()) c.links.push_back({cur, &cur->op, cur->args.at(0), cur->args.at(1)});
    else if (op.context()) c.links.push_back({cur, &cur->op, nullptr, cur->args.at(0)});
    else break;
    cur = c.links.back().body.get();
  }
  if (c.links.empty() || cur->kind != Sense::Kind::leaf) return std::nullopt;
  const Element* e = cur->leaf.element();
  if (!e || !(e->as_set() || e->as_relation())) return std::nullopt;
  c.base = c.links.back().body;
  c.relation = relation_view(*e);
  c.is_set = e->as_set() != nullptr;
  return c;
}

PropositionKind Evaluator::classify(const Sense& s) const {
  if (s.kind != Sense::Kind::apply) return PropositionKind::normal_phrase;
  if (s.op.modal()) return PropositionKind::modal;
  if (s.op.connective()) return PropositionKind::connective;

  auto c = chain_of(s);
  if (!c) return PropositionKind::normal_phrase;

  std::set<int> bound;
  bool quantified = false;
  for (const auto& l : c->links) {
    int var = 0;
    if (const auto* b = l.op->basic()) var = b->var;
    if (const auto* q = l.op->quantifier()) {
      var = q->var;
      quantified = true;
    }
    if (var == 0) continue;
    if (var < 1 || static_cast<std::size_t>(var) > c->relation.arity)
      throw EvaluationError("variable x" + std::to_string(var) + " outside a relation of arity " +
                            std::to_string(c->relation.arity) + " in " + s.key());
    bound.insert(var);
  }
  for (std::size_t i = 1; i <= c->relation.arity; ++i)
    if (!bound.count(static_cast<int>(i)))
      throw EvaluationError("free variable x" + std::to_string(i) + " in " + s.key() +
                            " (a formula, not a proposition)");

  if (quantified) return PropositionKind::quantified;
  if (c->is_set) return PropositionKind::atomic_II;
  switch (c->relation.info.truth) {
    case TruthKind::observational: return PropositionKind::atomic_I;
    case TruthKind::set: return PropositionKind::atomic_II;
    case TruthKind::mental: return PropositionKind::atomic_M;
  }
  return PropositionKind::normal_phrase;
}

Truth Evaluator::eval(const SensePtr& s) { return eval_at(s, false); }

Truth Evaluator::eval_at(const SensePtr& s, bool instantiated) {
  DepthGuard guard(depth_);
  auto key = std::make_pair(s->key(), instantiated);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  std::size_t slot = trace_.size();
  trace_.emplace_back();
  TraceEntry t;
  t.depth = depth_ - 1;
  t.sense = s->key();
  t.kind = classify(*s);
  t.value = dispatch(s, t.kind, instantiated, t);
  trace_[slot] = t;
  cache_.emplace(std::move(key), t.value);
  return t.value;
}

Truth Evaluator::dispatch(const SensePtr& s, PropositionKind kind, bool instantiated, TraceEntry& t) {
  switch (kind) {
    case PropositionKind::normal_phrase: t.note = "not a sentence"; return Truth::ud;
    case PropositionKind::connective: return connective(*s, t);
    case PropositionKind::modal: return modal(*s, t);
    default: break;
  }
  auto c = chain_of(*s);
  if (auto v = vacancy(*c, t)) return *v;
  switch (kind) {
    case PropositionKind::quantified: return quantified(s, *c, t);
    case PropositionKind::atomic_I: return atomic_observational(s, *c, instantiated, t);
    case PropositionKind::atomic_II: return atomic_set(s, *c, t);
    case PropositionKind::atomic_M: return atomic_mental(s, *c, t);
    default: return Truth::ud;
  }
}

std::optional<Truth> Evaluator::vacancy(const Chain& c, TraceEntry& t) {
  if (c.relation.seqs.empty()) {
    t.note = "vacant: " + c.base->key() + " is empty";
    return Truth::V;
  }
  for (const auto& l : c.links) {
    if (!l.domain || l.op->quantifier()) continue;
    Denotation d = evaluate(*l.domain, m_);
    const Element* e = element_of(d);
    if (!e || e->is_empty()) {
      t.note = "vacant: " + l.domain->key() + " denotes nothing";
      return Truth::V;
    }
  }
  return std::nullopt;
}

Element Evaluator::content(const Sense& s) const {
  Denotation d = evaluate(s, m_);
  const Element* e = element_of(d);
  if (!e) throw EvaluationError("proposition does not denote an element: " + s.key());
  return *e;
}

namespace {

const ElementSeq& single_sequence(const Relation& r, const std::string& key) {
  if (r.seqs.size() > 1)
    throw EvaluationError("content of " + key + " holds " + std::to_string(r.seqs.size()) +
                          " sequences; an atomic proposition needs at most one");
  return r.seqs.front();
}

}  // namespace

Truth Evaluator::atomic_observational(const SensePtr& s, const Chain&, bool instantiated, TraceEntry& t) {
  Relation r = relation_view(content(*s));
  t.content_size = r.seqs.size();
  if (r.seqs.empty()) {
    t.note = instantiated ? "no sequence under this assignment" : "empty content";
    return instantiated ? Truth::F : Truth::V;
  }
  const ElementSeq& seq = single_sequence(r, s->key());
  std::vector<Composite> parts;
  for (const auto& x : seq.items) parts.push_back(observations_of(x));

  std::set<ObsId> imaginary;
  for (const auto& c : parts)
    for (ObsId id : c)
      if (!m_.observations()[id].actual()) imaginary.insert(id);
  for (ObsId id : imaginary) {
    if (auto w = verifier_.verifying_witness(id)) t.witnesses.push_back({id, *w, true});
    else if (auto w2 = verifier_.refuting_witness(id)) t.witnesses.push_back({id, *w2, false});
  }
  if (verifier_.verified(parts)) return Truth::T;
  if (verifier_.refuted(parts)) return Truth::F;
  return Truth::U;
}

Truth Evaluator::atomic_set(const SensePtr& s, const Chain&, TraceEntry& t) {
  Relation r = relation_view(content(*s));
  t.content_size = r.seqs.size();
  return r.seqs.empty() ? Truth::F : Truth::T;
}

Truth Evaluator::atomic_mental(const SensePtr& s, const Chain& c, TraceEntry& t) {
  Relation r = relation_view(content(*s));
  t.content_size = r.seqs.size();
  if (r.seqs.empty()) {
    t.note = "empty content";
    return Truth::F;
  }
  const ElementSeq& seq = single_sequence(r, s->key());
  if (seq.items.size() != 2) throw EvaluationError("an M-relation pairs a mental process with its product");

  Composite process = observations_of(seq.items[0]);
  const bool verified = verifier_.verified(process);
  const bool refuted = !verified && verifier_.refuted(process);
  for (ObsId id : process) {
    if (m_.observations()[id].actual()) continue;
    if (auto w = verifier_.verifying_witness(id)) t.witnesses.push_back({id, *w, true});
    else if (auto w2 = verifier_.refuting_witness(id)) t.witnesses.push_back({id, *w2, false});
  }
  const RelationInfo& info = c.relation.info;
  if (!info.knowledge) return verified ? Truth::T : refuted ? Truth::F : Truth::U;

  auto product_sense = [&]() -> SensePtr {
    for (const auto& l : c.links)
      if (const auto* b = l.op->basic(); b && b->var == 2) return l.domain;
    throw EvaluationError("the product position of " + s->key() + " is not bound by a basic operation");
  };
  Truth product = Truth::ud;
  switch (info.product) {
    case ProductKind::denotation:
    case ProductKind::string: product = denotation_truth(seq.items[1]); break;
    case ProductKind::explanation:
      if (!interp_) throw EvaluationError("an explanation product needs the clause's interpretation");
      [[fallthrough]];
    case ProductKind::sense: product = eval_at(product_sense(), false); break;
  }
  t.note = "product " + std::string(to_string(product));
  if (verified && product == Truth::T) return Truth::T;
  if (refuted || product == Truth::F) return Truth::F;
  return Truth::U;
}

SensePtr Evaluator::replace_link(const Chain& c, std::size_t at, const SensePtr& replacement) const {
  SensePtr cur = replacement;
  for (std::size_t j = at; j-- > 0;) {
    const SensePtr& old = c.links[j].body;
    auto n = std::make_shared<Sense>(*c.links[j].node);
    for (auto& a : n->args)
      if (a == old) a = cur;
    if (n->modifier == old) n->modifier = cur;
    if (n->head == old) n->head = cur;
    n->seal();
    cur = std::move(n);
  }
  return cur;
}

Truth Evaluator::quantified(const SensePtr&, const Chain& c, TraceEntry& t) {
  std::size_t at = 0;
  while (!c.links[at].op->quantifier()) ++at;
  const Link& link = c.links[at];
  const QuantifierOp& q = *link.op->quantifier();

  Element dom = content(*link.domain);
  std::vector<Element> items = domain_items(dom);
  t.content_size = items.size();
  const double theta = opts_.most_threshold.value_or(q.theta);

  std::size_t n_t = 0, n_f = 0, n_u = 0, n_v = 0;
  for (const auto& a : items) {
    SensePtr inst = instantiate(link.body, q.var, Element::set({a}), q.match, m_);
    switch (eval_at(replace_link(c, at, inst), true)) {
      case Truth::T: ++n_t; break;
      case Truth::F: ++n_f; break;
      case Truth::V: ++n_v; break;
      default: ++n_u; break;
    }
  }
  t.note = std::string(to_string(q.sort)) + " over " + std::to_string(items.size()) + ": " +
           std::to_string(n_t) + " T, " + std::to_string(n_f) + " F, " + std::to_string(n_u) + " U, " +
           std::to_string(n_v) + " V";
  if (n_v) return Truth::V;
  switch (q.sort) {
    case QuantSort::forall:
      if (items.empty() || n_f) return Truth::F;
      return n_u ? Truth::U : Truth::T;
    case QuantSort::exists:
      if (n_t) return Truth::T;
      return n_u ? Truth::U : Truth::F;
    case QuantSort::unique:
      if (n_t > 1) return Truth::F;
      if (n_u == 0) return n_t == 1 ? Truth::T : Truth::F;
      return Truth::U;
    case QuantSort::most: {
      if (items.empty()) return Truth::F;
      const double bar = theta * static_cast<double>(items.size());
      if (static_cast<double>(n_t) > bar) return Truth::T;
      return static_cast<double>(n_t + n_u) > bar ? Truth::U : Truth::F;
    }
  }
  return Truth::U;
}

Truth Evaluator::connective(const Sense& s, TraceEntry& t) {
  const ConnectiveOp& c = *s.op.connective();
  if (c.table == ConnectiveId::negation) return negate(eval_at(s.args.at(0), false), opts_.logic);
  Truth a = eval_at(s.args.at(0), false);
  Truth b = eval_at(s.args.at(1), false);
  if (!c.associated_relation) return connect(c.table, a, b, opts_.logic);

  if (a == Truth::ud || b == Truth::ud) return Truth::ud;
  if (a == Truth::V || b == Truth::V) return Truth::V;
  Relation r = relation_view(content(s));
  t.content_size = r.seqs.size();
  if (r.seqs.empty()) {
    t.note = "no " + *c.associated_relation + " pair links the two propositions";
    return Truth::F;
  }
  return connect(ConnectiveId::conjunction, a, b, opts_.logic);
}

Truth Evaluator::modal(const Sense& s, TraceEntry& t) {
  if (s.meanings.empty()) throw EvaluationError("clause uninterpretable");
  const ModalOp& mo = *s.op.modal();

  std::vector<std::pair<std::string, Truth>> members;
  std::set<Element> seen_dens;
  std::set<std::string> seen_keys;
  for (const auto& c : s.meanings) {
    Truth v = Truth::ud;
    std::string label;
    switch (s.level) {
      case ArgLevel::denotation: {
        const Element* e = element_of(c->denotation);
        if (!e || !seen_dens.insert(*e).second) continue;
        label = m_.label(*e);
        v = denotation_truth(*e);
        break;
      }
      case ArgLevel::sense:
        if (!seen_keys.insert(c->sense->key()).second) continue;
        label = c->sense->key();
        v = eval_at(c->sense, false);
        break;
      case ArgLevel::explanation:
        label = c->explanation->key();
        v = eval_at(c->sense, false);
        break;
    }
    members.emplace_back(std::move(label), v == Truth::ud ? Truth::U : v);
  }
  t.content_size = members.size();

  auto find = [&](Truth v) {
    return std::find_if(members.begin(), members.end(), [v](const auto& p) { return p.second == v; });
  };
  auto count = [&](Truth v) {
    return std::count_if(members.begin(), members.end(), [v](const auto& p) { return p.second == v; });
  };
  if (auto it = find(Truth::V); it != members.end()) {
    t.note = "vacant member " + it->first;
    return Truth::V;
  }
  const auto n = static_cast<std::ptrdiff_t>(members.size());
  if (mo.sort == ModalSort::necessity) {
    if (auto it = find(Truth::F); it != members.end()) {
      t.note = "falsified by " + it->first;
      return Truth::F;
    }
    return count(Truth::T) == n ? Truth::T : Truth::U;
  }
  if (auto it = find(Truth::T); it != members.end()) {
    t.note = "witnessed by " + it->first;
    return Truth::T;
  }
  return count(Truth::F) == n ? Truth::F : Truth::U;
}

Truth Evaluator::denotation_truth(const Element& e) {
  if (!registry_ || !in_model(e, m_)) return Truth::ud;
  std::optional<Truth> common;
  for (const auto& s : registry_->implying(e)) {
    PropositionKind kind;
    try {
      kind = classify(*s);
    } catch (const EvaluationError&) {
      continue;  // a formula with free variables
    }
    if (kind == PropositionKind::normal_phrase) continue;
    Truth v = eval_at(s, false);
    if (common && *common != v) return Truth::ud;
    common = v;
  }
  return common.value_or(Truth::ud);
}

Truth eval_denotation_truth(const Element& e, const CognitiveModel& m, const SenseRegistry& registry,
                            EvalOptions opts) {
  return Evaluator(m, opts, &registry).denotation_truth(e);
}

bool explanation_matches(const Interpretation& interp, const Explanation& ex) {
  if (!interp.clause_nodes.count(ex.node_id)) {
    auto it = interp.triples.find(ex.node_id);
    if (it != interp.triples.end() && it->second.size() == 1 &&
        it->second.front()->sense->key() != ex.sense->key())
      return false;
  }
  if (ex.modifier && !explanation_matches(interp, *ex.modifier)) return false;
  return !ex.head || explanation_matches(interp, *ex.head);
}

SentenceResult sentence_truth(const Interpretation& interp, const MeaningTriple& root,
                              const CognitiveModel& m, EvalOptions opts, SenseRegistry& registry) {
  SentenceResult r;
  if (interp.tree.sentence == false) {
    r.note = "not a sentence";
    return r;
  }
  Evaluator ev(m, opts, &registry, &interp);
  r.kind = ev.classify(*root.sense);
  r.value = ev.eval(root.sense);
  if (r.kind == PropositionKind::normal_phrase) r.note = "not a sentence";
  r.explanation_consistent = explanation_matches(interp, *root.explanation);
  if (!r.explanation_consistent && in_z(r.value)) {
    r.value = Truth::F;
    r.note = "explanation pairs a phrase with a sense that was not chosen";
  }
  r.trace = ev.trace();
  return r;
}

SentenceResult eval_sentence(const Interpretation& interp, const CognitiveModel& m, EvalOptions opts,
                             SenseRegistry* registry) {
  SenseRegistry local;
  SenseRegistry& reg = registry ? *registry : local;
  if (interp.tree.sentence != false) {
    auto ambiguous = interp.ambiguous_nodes();
    if (!ambiguous.empty()) throw NotEffective(std::move(ambiguous));
    for (const auto& [id, triples] : interp.triples)
      for (const auto& t : triples) reg.add(t->sense, t->denotation);
  }
  const auto& root = interp.root();
  if (root.empty()) throw EvaluationError("phrase has empty meaning");
  return sentence_truth(interp, *root.front(), m, opts, reg);
}

}  // namespace cogsem
