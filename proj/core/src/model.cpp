#include "cogsem/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogsem {

namespace {

const std::map<TimePoint, std::vector<ObsId>> kNoTimeline;

std::optional<SpacePoint> located(const PrimitiveObservation& a) {
  auto s0 = extract_value(a, kSpacePoint);
  if (!s0 || s0->tag() != ParamValue::Tag::tuple) return std::nullopt;
  return s0->as_tuple();
}

TimePoint time_of(const PrimitiveObservation& a) { return extract_value(a, kTime)->as_int(); }

}  // namespace

CognitiveModel::CognitiveModel(std::vector<PrimitiveObservation> obs,
                               std::map<std::string, WorldInfo> worlds)
    : obs_(std::move(obs)), worlds_(std::move(worlds)) {
  std::map<std::string, std::size_t> inferred;
  for (ObsId id = 0; id < obs_.size(); ++id) {
    const auto& a = obs_[id];
    validate(a);
    const auto& w0 = a.world.labels.front();
    if (auto p = located(a)) {
      std::size_t d = p->size();
      if (auto it = worlds_.find(w0); it != worlds_.end()) {
        if (it->second.dimension != d)
          throw std::invalid_argument("observation in world '" + w0 + "' has a " +
                                      std::to_string(d) + "-dimensional space point, world has " +
                                      std::to_string(it->second.dimension));
      } else if (auto [jt, fresh] = inferred.emplace(w0, d); !fresh && jt->second != d) {
        throw std::invalid_argument("world '" + w0 + "' mixes space dimensions");
      }
    }
    timelines_[w0][time_of(a)].push_back(id);
  }
  for (auto& [w, d] : inferred) worlds_.try_emplace(w, WorldInfo{d, {}});
  for (const auto& [w, _] : timelines_) worlds_.try_emplace(w, WorldInfo{});
  obs_names_.resize(obs_.size());
}

Composite CognitiveModel::all() const {
  std::vector<ObsId> ids(obs_.size());
  for (ObsId id = 0; id < ids.size(); ++id) ids[id] = id;
  return Composite(std::move(ids));
}

Composite CognitiveModel::actual() const {
  std::vector<ObsId> ids;
  for (ObsId id = 0; id < obs_.size(); ++id)
    if (obs_[id].actual()) ids.push_back(id);
  return Composite(std::move(ids));
}

const WorldInfo* CognitiveModel::world(std::string_view label) const {
  auto it = worlds_.find(std::string(label));
  return it == worlds_.end() ? nullptr : &it->second;
}

void CognitiveModel::name_observation(ObsId id, std::string name) {
  if (obs_names_.at(id).empty()) obs_names_[id] = name;
  obs_by_name_.emplace(std::move(name), id);
}

std::string CognitiveModel::observation_name(ObsId id) const {
  if (id < obs_names_.size() && !obs_names_[id].empty()) return obs_names_[id];
  return "#" + std::to_string(id);
}

std::optional<ObsId> CognitiveModel::observation_by_name(std::string_view name) const {
  auto it = obs_by_name_.find(name);
  if (it == obs_by_name_.end()) return std::nullopt;
  return it->second;
}

void CognitiveModel::add_element(std::string name, Element e) {
  names_by_element_.try_emplace(e, name);
  elements_.insert_or_assign(std::move(name), std::move(e));
}

const Element* CognitiveModel::element(std::string_view name) const {
  auto it = elements_.find(name);
  return it == elements_.end() ? nullptr : &it->second;
}

std::optional<std::string> CognitiveModel::name_of(const Element& e) const {
  auto it = names_by_element_.find(e);
  if (it == names_by_element_.end()) return std::nullopt;
  return it->second;
}

std::string CognitiveModel::label(const Element& e) const {
  if (auto n = name_of(e)) return *n;
  auto join = [](auto first, auto last, auto render, char open, char close) {
    std::string out(1, open);
    for (auto it = first; it != last; ++it) {
      if (it != first) out += ',';
      out += render(*it);
    }
    return out + close;
  };
  auto sub = [this](const Element& x) { return label(x); };
  auto seq = [&](const ElementSeq& s) { return join(s.items.begin(), s.items.end(), sub, '(', ')'); };
  switch (e.kind()) {
    case Element::Kind::composite: {
      const auto& c = *e.as_composite();
      return join(c.begin(), c.end(), [this](ObsId id) { return observation_name(id); }, '{', '}');
    }
    case Element::Kind::set: {
      const auto& s = e.as_set()->items;
      return join(s.begin(), s.end(), sub, '{', '}');
    }
    case Element::Kind::sequence: return seq(*e.as_sequence());
    case Element::Kind::relation: {
      const auto& r = e.as_relation()->seqs;
      return join(r.begin(), r.end(), seq, '{', '}');
    }
    case Element::Kind::string: return "\"" + e.as_string()->text + "\"";
  }
  return "?";
}

void CognitiveModel::add_process(std::string name, Process p) {
  add_element(name, Element::composite(p.members));
  processes_.insert_or_assign(std::move(name), std::move(p));
}

const Process* CognitiveModel::process(std::string_view name) const {
  auto it = processes_.find(name);
  return it == processes_.end() ? nullptr : &it->second;
}

void CognitiveModel::register_object(ObjectDecl decl) {
  if (!process(decl.process))
    throw std::invalid_argument("object '" + decl.process + "' is not a declared process");
  objects_.push_back(std::move(decl));
}

const std::map<TimePoint, std::vector<ObsId>>& CognitiveModel::timeline(std::string_view world) const {
  auto it = timelines_.find(world);
  return it == timelines_.end() ? kNoTimeline : it->second;
}

// ---------------------------------------------------------------------------

ModelViolations audit(const CognitiveModel& m) {
  ModelViolations out;
  auto all = m.observations().all();
  for (auto [i, j] : check_observation_axiom(all))
    out.axiom.emplace_back(static_cast<ObsId>(i), static_cast<ObsId>(j));
  for (auto [i, j] : check_weak_consistency(all))
    out.weak.emplace_back(static_cast<ObsId>(i), static_cast<ObsId>(j));

  auto actual_ids = m.actual();
  std::vector<PrimitiveObservation> actual;
  actual.reserve(actual_ids.size());
  for (ObsId id : actual_ids) actual.push_back(m.observations()[id]);
  for (auto [i, j] : check_strong_consistency(actual))
    out.strong.emplace_back(actual_ids.ids()[i], actual_ids.ids()[j]);
  return out;
}

Composite world_of(const CognitiveModel& m, std::string_view u) {
  std::vector<ObsId> ids;
  for (const auto& [t, bucket] : m.timeline(u)) ids.insert(ids.end(), bucket.begin(), bucket.end());
  return Composite(std::move(ids));
}

Composite subworld_of(const CognitiveModel& m, std::string_view u, std::string_view v) {
  return filter(m.observations(), world_of(m, u),
                Predicate::in("w1", {ParamValue::symbol(std::string(v))}));
}

Process process_at(const CognitiveModel& m, std::string_view u, Segment seg, const RegionMap& regions) {
  auto lo = regions.lower_bound(seg.start);
  auto hi = regions.upper_bound(seg.end);
  auto covered = static_cast<std::uint64_t>(std::distance(lo, hi));
  if (covered != static_cast<std::uint64_t>(seg.end - seg.start) + 1)
    throw std::invalid_argument("incomplete region map");

  const WorldInfo* info = m.world(u);
  for (auto it = lo; it != hi; ++it) {
    std::size_t d = region_dimension(it->second);
    if (info && !it->second.empty() && d != info->dimension)
      throw std::invalid_argument("region at t=" + std::to_string(it->first) + " has dimension " +
                                  std::to_string(d) + " but world '" + std::string(u) + "' has " +
                                  std::to_string(info->dimension));
  }

  Process p{std::string(u), seg, RegionMap(lo, hi), {}};
  std::vector<ObsId> ids;
  const auto& tl = m.timeline(u);
  for (auto it = tl.lower_bound(seg.start); it != tl.end() && it->first <= seg.end; ++it) {
    const Region& r = p.region_map.at(it->first);
    for (ObsId id : it->second)
      if (auto s0 = located(m.observations()[id]); s0 && r.count(*s0)) ids.push_back(id);
  }
  p.members = Composite(std::move(ids));
  return p;
}

Composite state_of(const CognitiveModel& m, const Process& p, TimePoint t0) {
  if (!p.segment.contains(t0)) throw std::out_of_range("moment outside the process segment");
  std::vector<ObsId> ids;
  for (ObsId id : p.members)
    if (time_of(m.observations()[id]) == t0) ids.push_back(id);
  return Composite(std::move(ids));
}

namespace {

bool pointwise_subset(const Process& a, const Process& b, TimePoint lo, TimePoint hi) {
  for (TimePoint t = lo; t <= hi; ++t) {
    const auto& ra = a.region_map.at(t);
    const auto& rb = b.region_map.at(t);
    if (!std::includes(rb.begin(), rb.end(), ra.begin(), ra.end())) return false;
  }
  return true;
}

bool disjoint_throughout(const Process& a, const Process& b, TimePoint lo, TimePoint hi) {
  for (TimePoint t = lo; t <= hi; ++t) {
    const auto& ra = a.region_map.at(t);
    const auto& rb = b.region_map.at(t);
    for (const auto& p : ra)
      if (rb.count(p)) return false;
  }
  return true;
}

}  // namespace

ObjectConditions check_object_conditions(const CognitiveModel& m, const Process& p) {
  ObjectConditions out;
  const WorldInfo* info = m.world(p.world);

  bool some_region = std::any_of(p.region_map.begin(), p.region_map.end(),
                                 [](const auto& kv) { return !kv.second.empty(); });
  bool some_located = std::any_of(p.members.begin(), p.members.end(), [&](ObsId id) {
    return located(m.observations()[id]).has_value();
  });
  out.spatial_difference = info && info->dimension >= 1 && some_region && some_located;

  out.strict_boundary = std::all_of(p.region_map.begin(), p.region_map.end(), [](const auto& kv) {
    return !kv.second.empty() && region_topology(kv.second).connected;
  });

  out.disjointness = true;
  for (const auto& decl : m.objects()) {
    const Process* other = m.process(decl.process);
    if (*other == p) {
      out.strict_start_end = out.strict_start_end || decl.strict_start_end;
      continue;
    }
    if (other->world != p.world) continue;
    TimePoint lo = std::max(p.segment.start, other->segment.start);
    TimePoint hi = std::min(p.segment.end, other->segment.end);
    if (lo > hi) continue;
    if (disjoint_throughout(p, *other, lo, hi) || pointwise_subset(p, *other, lo, hi) ||
        pointwise_subset(*other, p, lo, hi))
      continue;
    out.disjointness = false;
  }
  return out;
}

const ParamValue* FeatureRepresentation::feature(std::string_view name) const {
  for (const auto& [n, v] : features)
    if (n == name) return &v;
  return nullptr;
}

bool check_constancy(const std::vector<Composite>& c, const RepresentationProcedure& psi,
                     const std::vector<std::string>& v1, const std::vector<std::string>& v2,
                     const std::optional<FeatureRanges>& ranges) {
  std::vector<FeatureRepresentation> reps;
  reps.reserve(c.size());
  for (const auto& member : c) {
    auto r = psi(member);
    if (!r) throw std::invalid_argument("representation procedure undefined on a member");
    reps.push_back(std::move(*r));
  }
  auto value = [](const FeatureRepresentation& r, const std::string& name) -> const ParamValue& {
    const ParamValue* v = r.feature(name);
    if (!v) throw std::invalid_argument("representation lacks feature '" + name + "'");
    return *v;
  };

  for (const auto& f : v1) {
    if (ranges) {
      auto it = ranges->find(f);
      if (it == ranges->end()) continue;
      for (const auto& r : reps) {
        const auto& v = value(r, f);
        if (std::find(it->second.begin(), it->second.end(), v) == it->second.end()) return false;
      }
    } else {
      for (std::size_t i = 1; i < reps.size(); ++i)
        if (value(reps[i], f) != value(reps[0], f)) return false;
    }
  }
  for (const auto& f : v2)
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (value(reps[i], f) == value(reps[j], f)) return false;
  return true;
}

}  // namespace cogsem
