#include "cogsem/observation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <variant>

namespace cogsem {

std::string_view to_string(AcIm a) noexcept {
  return a == AcIm::actual ? "actual" : "imaginary";
}

namespace {

bool declares(const std::vector<ParamDecl>& group, std::string_view name) {
  return std::any_of(group.begin(), group.end(),
                     [&](const ParamDecl& d) { return d.name == name; });
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

void validate(const PrimitiveObservation& a) {
  const auto& power = a.observer.power;
  if (a.world.labels.empty()) throw std::invalid_argument("world path is empty");
  if (a.observer.labels.empty()) throw std::invalid_argument("observer label sequence is empty");
  if (a.observer.state.size() != power.state.size())
    throw std::invalid_argument("state has " + std::to_string(a.observer.state.size()) +
                                " values but the resolution power declares " +
                                std::to_string(power.state.size()));
  if (a.resolution_point.size() != power.resolution.size())
    throw std::invalid_argument("resolution point has " +
                                std::to_string(a.resolution_point.size()) +
                                " values but the resolution power declares " +
                                std::to_string(power.resolution.size()));
  if (power.result.size() > 1) throw std::invalid_argument("more than one result parameter");
  if (!declares(power.state, kTime)) throw std::invalid_argument("state lacks time parameter t");
  if (!declares(power.state, kStateSpace))
    throw std::invalid_argument("state lacks space parameter s1");
  if (!declares(power.resolution, kSpacePoint))
    throw std::invalid_argument("resolution point lacks space parameter s0");
  if (extract_value(a, kTime)->tag() != ParamValue::Tag::integer)
    throw std::invalid_argument("time value must be an integer");
  auto s0 = *extract_value(a, kSpacePoint);
  if (!s0.is_empty() && s0.tag() != ParamValue::Tag::tuple)
    throw std::invalid_argument("s0 must be an integer tuple or the empty marker");
}

std::string describe(const PrimitiveObservation& a) {
  std::string out = "<" + join(a.world.labels, '/') + " | " + join(a.observer.labels, '.') + " " +
                    a.observer.power.name + " [";
  for (std::size_t i = 0; i < a.observer.state.size(); ++i) {
    if (i) out += ' ';
    out += a.observer.power.state[i].name + "=" + a.observer.state[i].to_string();
  }
  out += "] " + std::string(to_string(a.observer.ac_im)) + " | ";
  for (std::size_t i = 0; i < a.resolution_point.size(); ++i) {
    if (i) out += ' ';
    out += a.observer.power.resolution[i].name + "=" + a.resolution_point[i].to_string();
  }
  return out + " | " + a.result.to_string() + ">";
}

std::optional<ParamValue> extract_value(const PrimitiveObservation& a, std::string_view param) {
  if (param.size() >= 2 && param[0] == 'w' &&
      std::all_of(param.begin() + 1, param.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::size_t i = std::stoul(std::string(param.substr(1)));
    if (i < a.world.labels.size()) return ParamValue::symbol(a.world.labels[i]);
    return std::nullopt;
  }
  if (param == "o0") return ParamValue::symbol(join(a.observer.labels, '.'));
  if (param == "o3") return ParamValue::symbol(std::string(to_string(a.observer.ac_im)));
  if (param == "re0") return a.result;

  const auto& power = a.observer.power;
  for (std::size_t i = 0; i < power.state.size(); ++i)
    if (power.state[i].name == param) return a.observer.state[i];
  for (std::size_t i = 0; i < power.resolution.size(); ++i)
    if (power.resolution[i].name == param) return a.resolution_point[i];
  if (!power.result.empty() && power.result.front().name == param) return a.result;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ObservationSet::ObservationSet(std::vector<PrimitiveObservation> obs) : obs_(std::move(obs)) {
  std::sort(obs_.begin(), obs_.end());
  obs_.erase(std::unique(obs_.begin(), obs_.end()), obs_.end());
}

std::optional<ObsId> ObservationSet::find(const PrimitiveObservation& a) const {
  auto it = std::lower_bound(obs_.begin(), obs_.end(), a);
  if (it == obs_.end() || *it != a) return std::nullopt;
  return static_cast<ObsId>(it - obs_.begin());
}

Composite::Composite(std::vector<ObsId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Composite::contains(ObsId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Composite::intersects(const Composite& other) const {
  auto a = ids_.begin(), b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool Composite::subset_of(const Composite& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

Composite Composite::intersect(const Composite& other) const {
  Composite out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

Composite Composite::unite(const Composite& other) const {
  Composite out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

std::set<ParamValue> extract_set(const ObservationSet& store, const Composite& a,
                                 std::string_view param) {
  std::set<ParamValue> out;
  for (ObsId id : a)
    if (auto v = extract_value(store[id], param)) out.insert(std::move(*v));
  return out;
}

// ---------------------------------------------------------------------------

struct Predicate::Node {
  struct In {
    std::string param;
    std::vector<ParamValue> domain;
  };
  struct Range {
    std::string param;
    std::int64_t lo, hi;
  };
  struct All {
    std::vector<Predicate> parts;
  };
  struct Any {
    std::vector<Predicate> parts;
  };
  struct Not {
    Predicate inner;
  };
  std::variant<In, Range, All, Any, Not> v;
};

Predicate Predicate::in(std::string param, std::vector<ParamValue> domain) {
  return Predicate(std::make_shared<const Node>(Node{Node::In{std::move(param), std::move(domain)}}));
}

Predicate Predicate::range(std::string param, std::int64_t lo, std::int64_t hi) {
  return Predicate(std::make_shared<const Node>(Node{Node::Range{std::move(param), lo, hi}}));
}

Predicate Predicate::all_of(std::vector<Predicate> parts) {
  return Predicate(std::make_shared<const Node>(Node{Node::All{std::move(parts)}}));
}

Predicate Predicate::any_of(std::vector<Predicate> parts) {
  return Predicate(std::make_shared<const Node>(Node{Node::Any{std::move(parts)}}));
}

Predicate Predicate::negate(Predicate p) {
  return Predicate(std::make_shared<const Node>(Node{Node::Not{std::move(p)}}));
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

bool Predicate::holds(const PrimitiveObservation& a) const {
  return std::visit(
      overloaded{
          [&](const Node::In& n) {
            auto v = extract_value(a, n.param);
            if (!v || v->is_empty()) return false;
            return std::any_of(n.domain.begin(), n.domain.end(),
                               [&](const ParamValue& d) { return v->compare(d) == 0; });
          },
          [&](const Node::Range& n) {
            auto v = extract_value(a, n.param);
            if (!v || v->is_empty()) return false;
            auto x = v->as_int();
            return n.lo <= x && x <= n.hi;
          },
          [&](const Node::All& n) {
            return std::all_of(n.parts.begin(), n.parts.end(),
                               [&](const Predicate& p) { return p.holds(a); });
          },
          [&](const Node::Any& n) {
            return std::any_of(n.parts.begin(), n.parts.end(),
                               [&](const Predicate& p) { return p.holds(a); });
          },
          [&](const Node::Not& n) { return !n.inner.holds(a); },
      },
      node_->v);
}

std::string Predicate::describe() const {
  auto list = [](const std::vector<Predicate>& parts, const char* op) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += op;
      out += parts[i].describe();
    }
    return out + ")";
  };
  return std::visit(
      overloaded{
          [](const Node::In& n) {
            std::string out = n.param + " in {";
            for (std::size_t i = 0; i < n.domain.size(); ++i) {
              if (i) out += ',';
              out += n.domain[i].to_string();
            }
            return out + "}";
          },
          [](const Node::Range& n) {
            return n.param + " in [" + std::to_string(n.lo) + "," + std::to_string(n.hi) + "]";
          },
          [&](const Node::All& n) { return list(n.parts, " and "); },
          [&](const Node::Any& n) { return list(n.parts, " or "); },
          [](const Node::Not& n) { return "not " + n.inner.describe(); },
      },
      node_->v);
}

Composite filter(const ObservationSet& store, const Composite& a, const Predicate& pred) {
  std::vector<ObsId> kept;
  for (ObsId id : a)
    if (pred.holds(store[id])) kept.push_back(id);
  return Composite(std::move(kept));
}

// ---------------------------------------------------------------------------

namespace {

// Sorts indices by a key projection and reports every pair inside an equal-key
// run that satisfies `offends`.
template <class KeyFn, class Offends>
std::vector<ViolationPair> pairs_within_groups(std::span<const PrimitiveObservation> a, KeyFn key,
                                               Offends offends) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return key(a[x]) < key(a[y]); });
  std::vector<ViolationPair> out;
  for (std::size_t lo = 0; lo < idx.size();) {
    std::size_t hi = lo + 1;
    while (hi < idx.size() && key(a[idx[lo]]) == key(a[idx[hi]])) ++hi;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < hi; ++j)
        if (offends(a[idx[i]], a[idx[j]]))
          out.push_back({std::min(idx[i], idx[j]), std::max(idx[i], idx[j])});
    lo = hi;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ViolationPair> check_observation_axiom(std::span<const PrimitiveObservation> a) {
  return pairs_within_groups(
      a, [](const PrimitiveObservation& x) { return std::tie(x.world, x.observer, x.resolution_point); },
      [](const PrimitiveObservation& x, const PrimitiveObservation& y) { return x.result != y.result; });
}

std::vector<ViolationPair> check_weak_consistency(std::span<const PrimitiveObservation> a) {
  return pairs_within_groups(
      a,
      [](const PrimitiveObservation& x) {
        return std::tie(x.world, x.observer.power, x.observer.state, x.observer.ac_im,
                        x.resolution_point);
      },
      [](const PrimitiveObservation& x, const PrimitiveObservation& y) {
        return x.observer.labels != y.observer.labels && x.result != y.result;
      });
}

std::vector<ViolationPair> check_strong_consistency(std::span<const PrimitiveObservation> a) {
  return pairs_within_groups(
      a,
      [](const PrimitiveObservation& x) {
        return std::tie(x.world.labels.front(), x.observer.state, x.observer.ac_im);
      },
      [](const PrimitiveObservation& x, const PrimitiveObservation& y) {
        return x.observer.labels != y.observer.labels;
      });
}

bool weakly_observer_consistent(std::span<const PrimitiveObservation> a) {
  return check_weak_consistency(a).empty() && check_observation_axiom(a).empty();
}

namespace {

bool same_context(const PrimitiveObservation& b, const PrimitiveObservation& a) {
  return a.world == b.world && a.observer.power == b.observer.power &&
         a.observer.state == b.observer.state && a.resolution_point == b.resolution_point;
}

}  // namespace

bool directly_verifies(const PrimitiveObservation& b, const PrimitiveObservation& a) {
  return a.observer.ac_im == AcIm::imaginary && b.observer.ac_im == AcIm::actual &&
         same_context(b, a) && a.result == b.result;
}

bool directly_refutes(const PrimitiveObservation& b, const PrimitiveObservation& a) {
  return a.observer.ac_im == AcIm::imaginary && b.observer.ac_im == AcIm::actual &&
         same_context(b, a) && a.result != b.result;
}

// ---------------------------------------------------------------------------

Verifier::Key Verifier::key_of(const PrimitiveObservation& a) {
  return Key{&a.world, &a.observer.power, &a.observer.state, &a.resolution_point};
}

void Verifier::index(ObsId id) {
  const auto& a = (*store_)[id];
  if (a.actual()) by_context_[key_of(a)].push_back(id);
}

Verifier::Verifier(const ObservationSet& store) : store_(&store) {
  for (ObsId id = 0; id < store.size(); ++id) index(id);
}

Verifier::Verifier(const ObservationSet& store, const Composite& actuals) : store_(&store) {
  for (ObsId id : actuals) index(id);
}

std::optional<ObsId> Verifier::verifying_witness(ObsId imaginary) const {
  const auto& a = (*store_)[imaginary];
  auto it = by_context_.find(key_of(a));
  if (it == by_context_.end()) return std::nullopt;
  for (ObsId b : it->second)
    if (directly_verifies((*store_)[b], a)) return b;
  return std::nullopt;
}

std::optional<ObsId> Verifier::refuting_witness(ObsId imaginary) const {
  const auto& a = (*store_)[imaginary];
  auto it = by_context_.find(key_of(a));
  if (it == by_context_.end()) return std::nullopt;
  for (ObsId b : it->second)
    if (directly_refutes((*store_)[b], a)) return b;
  return std::nullopt;
}

bool Verifier::verified(const Composite& a) const {
  return std::all_of(a.begin(), a.end(), [&](ObsId id) {
    return (*store_)[id].actual() || verifying_witness(id).has_value();
  });
}

bool Verifier::refuted(const Composite& a) const {
  return std::all_of(a.begin(), a.end(), [&](ObsId id) {
    return (*store_)[id].actual() || refuting_witness(id).has_value();
  });
}

bool Verifier::verified(std::span<const Composite> seq) const {
  return std::all_of(seq.begin(), seq.end(), [&](const Composite& c) { return verified(c); });
}

bool Verifier::refuted(std::span<const Composite> seq) const {
  return std::all_of(seq.begin(), seq.end(), [&](const Composite& c) { return refuted(c); });
}

bool is_directly_verified(const ObservationSet& store, const Composite& a,
                          const Composite& actuals) {
  return Verifier(store, actuals).verified(a);
}

bool is_directly_refuted(const ObservationSet& store, const Composite& a,
                         const Composite& actuals) {
  return Verifier(store, actuals).refuted(a);
}

}  // namespace cogsem
