#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogsem/element.hpp"
#include "cogsem/observation.hpp"
#include "cogsem/region.hpp"

namespace cogsem {

struct WorldInfo {
  std::size_t dimension = 0;
  std::vector<std::string> subworlds;
};

using RegionMap = std::map<TimePoint, Region>;

struct Process {
  std::string world;
  Segment segment;
  RegionMap region_map;
  Composite members;
  friend bool operator==(const Process&, const Process&) = default;
};

struct ObjectDecl {
  std::string process;
  bool strict_start_end = false;
};

class CognitiveModel {
 public:
  CognitiveModel() = default;
  // Validates every observation and its space dimension against `worlds`.
  explicit CognitiveModel(std::vector<PrimitiveObservation> obs,
                          std::map<std::string, WorldInfo> worlds = {});

  const ObservationSet& observations() const noexcept { return obs_; }
  Composite all() const;
  Composite actual() const;

  const std::map<std::string, WorldInfo>& worlds() const noexcept { return worlds_; }
  const WorldInfo* world(std::string_view label) const;

  void name_observation(ObsId id, std::string name);
  std::string observation_name(ObsId id) const;
  std::optional<ObsId> observation_by_name(std::string_view name) const;

  void add_element(std::string name, Element e);
  const Element* element(std::string_view name) const;
  const std::map<std::string, Element, std::less<>>& elements() const noexcept { return elements_; }
  // First registered name of an element with this exact content.
  std::optional<std::string> name_of(const Element& e) const;
  // The registered name, else a structural rendering such as {#3,#4} or
  // {tree1,tree2}. Equal elements get equal labels.
  std::string label(const Element& e) const;

  void add_process(std::string name, Process p);
  const Process* process(std::string_view name) const;

  void register_object(ObjectDecl decl);
  const std::vector<ObjectDecl>& objects() const noexcept { return objects_; }

  // Observations of a world bucketed by time.
  const std::map<TimePoint, std::vector<ObsId>>& timeline(std::string_view world) const;

 private:
  ObservationSet obs_;
  std::map<std::string, WorldInfo> worlds_;
  std::map<std::string, std::map<TimePoint, std::vector<ObsId>>, std::less<>> timelines_;
  std::vector<std::string> obs_names_;
  std::map<std::string, ObsId, std::less<>> obs_by_name_;
  std::map<std::string, Element, std::less<>> elements_;
  std::map<Element, std::string> names_by_element_;
  std::map<std::string, Process, std::less<>> processes_;
  std::vector<ObjectDecl> objects_;
};

struct ModelViolations {
  std::vector<std::pair<ObsId, ObsId>> axiom;
  std::vector<std::pair<ObsId, ObsId>> weak;
  std::vector<std::pair<ObsId, ObsId>> strong;  // over the actual subset
  bool empty() const noexcept { return axiom.empty() && weak.empty() && strong.empty(); }
};

ModelViolations audit(const CognitiveModel& m);

Composite world_of(const CognitiveModel& m, std::string_view u);
Composite subworld_of(const CognitiveModel& m, std::string_view u, std::string_view v);

// The unique process of world u over `seg` with the given region at each
// moment. Throws std::invalid_argument "incomplete region map" when a moment
// of the segment has no region.
Process process_at(const CognitiveModel& m, std::string_view u, Segment seg, const RegionMap& regions);

// Throws std::out_of_range when t0 lies outside the process segment.
Composite state_of(const CognitiveModel& m, const Process& p, TimePoint t0);

struct ObjectConditions {
  bool spatial_difference = false;
  bool strict_boundary = false;
  bool disjointness = false;
  bool strict_start_end = false;
};

ObjectConditions check_object_conditions(const CognitiveModel& m, const Process& p);

struct FeatureRepresentation {
  std::string algorithm_id;
  std::vector<std::pair<std::string, ParamValue>> features;

  const ParamValue* feature(std::string_view name) const;
};

using RepresentationProcedure =
    std::function<std::optional<FeatureRepresentation>(const Composite&)>;

using FeatureRanges = std::map<std::string, std::vector<ParamValue>, std::less<>>;

// Constancy when `ranges` is absent: equal on every v1 feature and pairwise
// different on every v2 feature. Similarity otherwise: v1 values inside their
// ranges, v2 pairwise different. Throws when psi is undefined on a member.
bool check_constancy(const std::vector<Composite>& c, const RepresentationProcedure& psi,
                     const std::vector<std::string>& v1, const std::vector<std::string>& v2,
                     const std::optional<FeatureRanges>& ranges = std::nullopt);

}  // namespace cogsem
