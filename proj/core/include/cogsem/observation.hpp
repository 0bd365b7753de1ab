#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cogsem/param_value.hpp"

namespace cogsem {

enum class AcIm : std::uint8_t { actual, imaginary };

std::string_view to_string(AcIm a) noexcept;

struct ParamDecl {
  std::string name;
  std::string domain;
  friend auto operator<=>(const ParamDecl&, const ParamDecl&) = default;
};

// o[1]: what the observer can distinguish, grouped by role.
struct ResolutionPower {
  std::string name;
  std::vector<ParamDecl> state;
  std::vector<ParamDecl> resolution;
  std::vector<ParamDecl> result;
  friend auto operator<=>(const ResolutionPower&, const ResolutionPower&) = default;
};

struct WorldPath {
  std::vector<std::string> labels;
  friend auto operator<=>(const WorldPath&, const WorldPath&) = default;
};

struct ObserverSpec {
  std::vector<std::string> labels;  // o[0]
  ResolutionPower power;            // o[1]
  std::vector<ParamValue> state;    // o[2]
  AcIm ac_im = AcIm::actual;        // o[3]
  friend auto operator<=>(const ObserverSpec&, const ObserverSpec&) = default;
};

struct PrimitiveObservation {
  WorldPath world;
  ObserverSpec observer;
  std::vector<ParamValue> resolution_point;
  ParamValue result;

  bool actual() const noexcept { return observer.ac_im == AcIm::actual; }
  friend auto operator<=>(const PrimitiveObservation&, const PrimitiveObservation&) = default;
};

// Throws std::invalid_argument describing the first broken invariant.
void validate(const PrimitiveObservation& a);

std::string describe(const PrimitiveObservation& a);

// Well-known parameter names. World labels are "w0", "w1", ...; "o0" is the
// observer label sequence joined by '.', "o3" the ac/im flag, "re0" the result.
inline constexpr std::string_view kTime = "t";
inline constexpr std::string_view kStateSpace = "s1";
inline constexpr std::string_view kSpacePoint = "s0";

std::optional<ParamValue> extract_value(const PrimitiveObservation& a, std::string_view param);

using ObsId = std::uint32_t;

// The deduplicated observation domain. Ids index a canonical sorted order, so
// equal contents give equal ids.
class ObservationSet {
 public:
  ObservationSet() = default;
  explicit ObservationSet(std::vector<PrimitiveObservation> obs);

  std::size_t size() const noexcept { return obs_.size(); }
  const PrimitiveObservation& operator[](ObsId id) const { return obs_.at(id); }
  std::span<const PrimitiveObservation> all() const noexcept { return obs_; }
  std::optional<ObsId> find(const PrimitiveObservation& a) const;

 private:
  std::vector<PrimitiveObservation> obs_;
};

// A composite observation: a set of ids into an ObservationSet.
class Composite {
 public:
  Composite() = default;
  explicit Composite(std::vector<ObsId> ids);

  std::span<const ObsId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  bool contains(ObsId id) const;
  bool intersects(const Composite& other) const;
  bool subset_of(const Composite& other) const;
  Composite intersect(const Composite& other) const;
  Composite unite(const Composite& other) const;

  friend auto operator<=>(const Composite&, const Composite&) = default;

 private:
  std::vector<ObsId> ids_;
};

std::set<ParamValue> extract_set(const ObservationSet& store, const Composite& a,
                                 std::string_view param);

// A parameter predicate built from membership tests "param in D" closed under
// and/or/not. A test on an undefined parameter, or on the empty marker, fails.
class Predicate {
 public:
  static Predicate in(std::string param, std::vector<ParamValue> domain);
  static Predicate range(std::string param, std::int64_t lo, std::int64_t hi);
  static Predicate all_of(std::vector<Predicate> parts);
  static Predicate any_of(std::vector<Predicate> parts);
  static Predicate negate(Predicate p);

  bool holds(const PrimitiveObservation& a) const;
  std::string describe() const;

  struct Node;

 private:
  explicit Predicate(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Composite filter(const ObservationSet& store, const Composite& a, const Predicate& pred);

struct ViolationPair {
  std::size_t first;
  std::size_t second;
  friend auto operator<=>(const ViolationPair&, const ViolationPair&) = default;
};

// Pairs with the same world, observer and resolution point but different
// results. Indices refer to the input span, first < second, sorted.
std::vector<ViolationPair> check_observation_axiom(std::span<const PrimitiveObservation> a);

// Pairs identical except in o[0] and the result, where both differ.
std::vector<ViolationPair> check_weak_consistency(std::span<const PrimitiveObservation> a);

// Pairs with different o[0] but the same w[0], state and ac/im label.
std::vector<ViolationPair> check_strong_consistency(std::span<const PrimitiveObservation> a);

// No pair differs only in o[0] and the result: the union of the two checks
// above restricted to the observer-consistency definition.
bool weakly_observer_consistent(std::span<const PrimitiveObservation> a);

bool directly_verifies(const PrimitiveObservation& b, const PrimitiveObservation& a);
bool directly_refutes(const PrimitiveObservation& b, const PrimitiveObservation& a);

// Witness lookup over a fixed set of actual observations.
class Verifier {
 public:
  explicit Verifier(const ObservationSet& store);
  Verifier(const ObservationSet& store, const Composite& actuals);

  std::optional<ObsId> verifying_witness(ObsId imaginary) const;
  std::optional<ObsId> refuting_witness(ObsId imaginary) const;

  bool verified(const Composite& a) const;
  bool refuted(const Composite& a) const;
  bool verified(std::span<const Composite> seq) const;
  bool refuted(std::span<const Composite> seq) const;

 private:
  struct Key {
    const WorldPath* world;
    const ResolutionPower* power;
    const std::vector<ParamValue>* state;
    const std::vector<ParamValue>* point;
    friend bool operator<(const Key& a, const Key& b) {
      return std::tie(*a.world, *a.power, *a.state, *a.point) <
             std::tie(*b.world, *b.power, *b.state, *b.point);
    }
  };
  static Key key_of(const PrimitiveObservation& a);
  void index(ObsId id);

  const ObservationSet* store_;
  std::map<Key, std::vector<ObsId>> by_context_;
};

bool is_directly_verified(const ObservationSet& store, const Composite& a,
                          const Composite& actuals);
bool is_directly_refuted(const ObservationSet& store, const Composite& a,
                         const Composite& actuals);

}  // namespace cogsem
