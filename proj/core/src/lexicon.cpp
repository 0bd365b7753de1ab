#include "cogsem/lexicon.hpp"

#include <algorithm>

namespace cogsem {

void Lexicon::add(LexiconEntry entry) {
  if (entry.denotations.empty() && !entry.empty_meaning)
    throw std::invalid_argument("token '" + entry.surface +
                                "' has no denotation and is not marked as pure syntax");
  for (std::size_t i = 0; i < entry.denotations.size(); ++i)
    entry.denotations[i].ordinal = static_cast<int>(i);
  std::string key = entry.surface;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

const LexiconEntry* Lexicon::find(std::string_view surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<DenotationRef> lookup(const Lexicon& lex, std::string_view token) {
  const LexiconEntry* e = lex.find(token);
  if (!e) throw UnknownToken(token);
  return e->denotations;
}

void validate(const Context& ctx, const CognitiveModel& m) {
  for (const auto& fact : ctx.facts)
    for (ObsId id : fact)
      if (!m.observations()[id].actual())
        throw std::invalid_argument("context fact contains imaginary observation " +
                                    m.observation_name(id));
}

namespace {

class Scope {
 public:
  Scope(const CognitiveModel& m, const Context& ctx) : m_(m), ctx_(ctx) {}

  bool active() const {
    return ctx_.selected_world || ctx_.time_window || !ctx_.region_hints.empty();
  }

  bool inside(ObsId id) const {
    const auto& a = m_.observations()[id];
    if (ctx_.selected_world && a.world.labels.front() != *ctx_.selected_world) return false;
    if (ctx_.time_window && !ctx_.time_window->contains(extract_value(a, kTime)->as_int()))
      return false;
    if (!ctx_.region_hints.empty()) {
      auto s0 = extract_value(a, kSpacePoint);
      if (s0 && s0->tag() == ParamValue::Tag::tuple) {
        bool hit = std::any_of(ctx_.region_hints.begin(), ctx_.region_hints.end(),
                               [&](const auto& kv) { return kv.second.count(s0->as_tuple()) > 0; });
        if (!hit) return false;
      }
    }
    return true;
  }

  bool wholly_inside(const Element& e) const {
    auto obs = observations_of(e);
    return std::all_of(obs.begin(), obs.end(), [&](ObsId id) { return inside(id); });
  }

  bool touches(const Element& e) const {
    auto obs = observations_of(e);
    return obs.empty() || std::any_of(obs.begin(), obs.end(), [&](ObsId id) { return inside(id); });
  }

 private:
  const CognitiveModel& m_;
  const Context& ctx_;
};

// Narrowed element, or nullopt when nothing of it is in scope.
std::optional<Element> narrow(const Scope& scope, const Element& e) {
  if (const auto* r = e.as_relation()) {
    std::vector<ElementSeq> kept;
    for (const auto& s : r->seqs)
      if (std::all_of(s.items.begin(), s.items.end(),
                      [&](const Element& x) { return scope.wholly_inside(x); }))
        kept.push_back(s);
    if (kept.empty() && !r->seqs.empty()) return std::nullopt;
    return Element::relation(r->arity, std::move(kept), r->info);
  }
  if (const auto* s = e.as_set()) {
    std::vector<Element> kept;
    for (const auto& x : s->items)
      if (scope.wholly_inside(x)) kept.push_back(x);
    if (kept.empty() && !s->items.empty()) return std::nullopt;
    return Element::set(std::move(kept));
  }
  if (!scope.touches(e)) return std::nullopt;
  return e;
}

const Directive* directive_for(const Context& ctx, std::string_view node_id, std::string_view token) {
  if (auto it = ctx.directives.find(node_id); it != ctx.directives.end()) return &it->second;
  if (auto it = ctx.directives.find(token); it != ctx.directives.end()) return &it->second;
  return nullptr;
}

}  // namespace

std::vector<DenotationRef> apply_context(const CognitiveModel& m, const Context& ctx,
                                         std::string_view node_id, std::string_view token,
                                         std::vector<DenotationRef> candidates) {
  Scope scope(m, ctx);
  std::vector<DenotationRef> kept;
  for (auto& c : candidates) {
    const Element* e = c.element();
    if (!e || !scope.active()) {
      kept.push_back(std::move(c));
      continue;
    }
    auto narrowed = narrow(scope, *e);
    if (!narrowed) continue;
    if (!(*narrowed == *e)) {
      c.value = std::make_shared<const Element>(std::move(*narrowed));
      if (!c.name.ends_with("@ctx")) c.name += "@ctx";
    }
    kept.push_back(std::move(c));
  }

  const Directive* d = directive_for(ctx, node_id, token);
  if (!d || (!d->index && !d->name)) return kept;
  auto it = std::find_if(kept.begin(), kept.end(), [&](const DenotationRef& c) {
    if (d->index) return c.ordinal == *d->index;
    return c.name == *d->name || c.name == *d->name + "@ctx";
  });
  if (it == kept.end())
    throw std::invalid_argument("directive for '" + std::string(token) + "' at " +
                                std::string(node_id) + " names an absent candidate");
  return {std::move(*it)};
}

std::string_view to_string(PhraseClass c) noexcept {
  switch (c) {
    case PhraseClass::content: return "content";
    case PhraseClass::function: return "function";
    case PhraseClass::mixed: return "mixed";
  }
  return "?";
}

PhraseClass classify(std::span<const DenotationRef> denotations) {
  if (denotations.empty()) throw std::invalid_argument("cannot classify an empty denotation set");
  std::size_t ops = std::count_if(denotations.begin(), denotations.end(),
                                  [](const DenotationRef& d) { return d.operation() != nullptr; });
  if (ops == 0) return PhraseClass::content;
  if (ops == denotations.size()) return PhraseClass::function;
  return PhraseClass::mixed;
}

const OperationDef& convention_for(const Context& ctx, std::string_view pattern,
                                   std::string_view node_id) {
  auto it = ctx.conventions.find(pattern);
  if (it == ctx.conventions.end() || it->second.empty())
    throw std::invalid_argument("no convention for pattern '" + std::string(pattern) + "' at " +
                                std::string(node_id));
  std::size_t pick = 0;
  if (auto d = ctx.directives.find(node_id); d != ctx.directives.end() && d->second.convention)
    pick = *d->second.convention;
  if (pick >= it->second.size())
    throw std::invalid_argument("convention directive at " + std::string(node_id) +
                                " is out of range");
  return it->second[pick];
}

}  // namespace cogsem
