#include "cogsem/report.hpp"

#include <json.hpp>

namespace cogsem {

namespace {

using json = nlohmann::json;

constexpr std::string_view kVacant = "(vacant)";

std::string pair_text(const std::pair<ObsId, ObsId>& p, const CognitiveModel& m) {
  return m.observation_name(p.first) + " " + m.observation_name(p.second);
}

const DepTree* find_node(const DepTree& t, std::string_view id) {
  if (t.id == id) return &t;
  for (const auto& c : t.children)
    if (auto p = find_node(c, id)) return p;
  return nullptr;
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) noexcept {
  if (s == "text") return Format::text;
  if (s == "structured") return Format::structured;
  return std::nullopt;
}

std::string describe(const Denotation& d, const CognitiveModel& m) {
  if (const Element* e = element_of(d)) {
    std::string out = m.label(*e);
    if (e->is_empty()) out += " " + std::string(kVacant);
    return out;
  }
  if (const auto* op = std::get_if<OperationDef>(&d)) return "operation " + op->signature();
  const auto& p = std::get<PartialOp>(d);
  return "operation " + p.op.signature() + " bound to " + p.bound->sense->key();
}

std::string render_violations(const ModelViolations& v, const CognitiveModel& m, Format f) {
  const std::pair<const char*, const std::vector<std::pair<ObsId, ObsId>>*> groups[] = {
      {"axiom", &v.axiom}, {"weak", &v.weak}, {"strong", &v.strong}};
  if (f == Format::structured) {
    json out;
    out["valid"] = v.empty();
    out["observations"] = m.observations().size();
    for (const auto& [name, list] : groups) {
      json a = json::array();
      for (const auto& p : *list) a.push_back({m.observation_name(p.first), m.observation_name(p.second)});
      out[name] = std::move(a);
    }
    return out.dump(2) + "\n";
  }
  std::string out = "observations: " + std::to_string(m.observations().size()) + "\n";
  for (const auto& [name, list] : groups) {
    out += std::string(name) + ": " + (list->empty() ? "none" : std::to_string(list->size())) + "\n";
    for (const auto& p : *list) out += "  " + pair_text(p, m) + "\n";
  }
  out += v.empty() ? "valid\n" : "invalid\n";
  return out;
}

std::string render_interpretation(const Interpretation& in, const CognitiveModel& m, Format f) {
  auto ambiguous = in.ambiguous_nodes();
  if (f == Format::structured) {
    json nodes = json::array();
    for (const auto& id : in.order) {
      const DepTree* t = find_node(in.tree, id);
      json n;
      n["id"] = id;
      n["surface"] = surface(*t);
      if (t->is_leaf())
        if (auto c = in.candidates.find(id); c != in.candidates.end()) n["candidates"] = c->second;
      if (in.clause_nodes.count(id)) n["clause"] = true;
      json rs = json::array();
      for (const auto& tr : in.at(id)) {
        const Element* e = element_of(tr->denotation);
        rs.push_back({{"denotation", describe(tr->denotation, m)},
                      {"vacant", e && e->is_empty()},
                      {"sense", tr->sense->key()},
                      {"explanation", tr->explanation->key()}});
      }
      n["readings"] = std::move(rs);
      nodes.push_back(std::move(n));
    }
    json out;
    out["nodes"] = std::move(nodes);
    out["effective"] = ambiguous.empty();
    out["ambiguous"] = ambiguous;
    return out.dump(2) + "\n";
  }

  std::string out;
  for (const auto& id : in.order) {
    const DepTree* t = find_node(in.tree, id);
    const auto& rs = in.at(id);
    out += id + " \"" + surface(*t) + "\"";
    if (in.clause_nodes.count(id)) out += " (clause)";
    out += "\n";
    if (t->is_leaf())
      if (auto c = in.candidates.find(id); c != in.candidates.end())
        out += "  candidates: " + std::to_string(c->second) + "\n";
    if (rs.empty()) out += "  no meaning (syntax only)\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto& tr = rs[i];
      std::string tag = rs.size() > 1 ? "  [" + std::to_string(i) + "] " : "  ";
      out += tag + "denotation: " + describe(tr->denotation, m) + "\n";
      out += tag + "sense: " + tr->sense->key() + "\n";
      out += tag + "explanation: " + tr->explanation->key() + "\n";
    }
  }
  out += "effective: " + std::string(ambiguous.empty() ? "yes" : "no");
  if (!ambiguous.empty()) {
    out += " (ambiguous:";
    for (const auto& id : ambiguous) out += " " + id;
    out += ")";
  }
  return out + "\n";
}

std::string render_verdict(const SentenceResult& r, const CognitiveModel& m, const EvalOptions& opts,
                           Format f) {
  auto witness_relation = [](const Witness& w) { return w.verifies ? "verifies" : "refutes"; };
  if (f == Format::structured) {
    json trace = json::array();
    for (const auto& t : r.trace) {
      json e;
      e["depth"] = t.depth;
      e["sense"] = t.sense;
      e["kind"] = std::string(to_string(t.kind));
      e["value"] = std::string(to_string(t.value));
      if (t.content_size) e["content_size"] = *t.content_size;
      if (!t.note.empty()) e["note"] = t.note;
      json ws = json::array();
      for (const auto& w : t.witnesses)
        ws.push_back({{"imaginary", m.observation_name(w.imaginary)},
                      {"actual", m.observation_name(w.actual)},
                      {"relation", witness_relation(w)}});
      if (!ws.empty()) e["witnesses"] = std::move(ws);
      trace.push_back(std::move(e));
    }
    json out;
    out["verdict"] = std::string(to_string(r.value));
    out["kind"] = std::string(to_string(r.kind));
    out["logic"] = std::string(to_string(opts.logic));
    out["explanation_consistent"] = r.explanation_consistent;
    if (!r.note.empty()) out["note"] = r.note;
    out["trace"] = std::move(trace);
    return out.dump(2) + "\n";
  }

  std::string out = "verdict: " + std::string(to_string(r.value)) + "\n";
  out += "kind: " + std::string(to_string(r.kind)) + "\n";
  out += "logic: " + std::string(to_string(opts.logic)) + "\n";
  out += "explanation: " + std::string(r.explanation_consistent ? "consistent" : "inconsistent") + "\n";
  if (!r.note.empty()) out += "note: " + r.note + "\n";
  if (!r.trace.empty()) out += "trace:\n";
  for (const auto& t : r.trace) {
    std::string pad(2 + 2 * static_cast<std::size_t>(t.depth), ' ');
    out += pad + std::string(to_string(t.value)) + " " + std::string(to_string(t.kind)) + " " + t.sense;
    if (t.content_size) out += " |content|=" + std::to_string(*t.content_size);
    out += "\n";
    if (!t.note.empty()) out += pad + "  note: " + t.note + "\n";
    for (const auto& w : t.witnesses)
      out += pad + "  witness: " + m.observation_name(w.actual) + " " + witness_relation(w) + " " +
             m.observation_name(w.imaginary) + "\n";
  }
  return out;
}

}  // namespace cogsem
