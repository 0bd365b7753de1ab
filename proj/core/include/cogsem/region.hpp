#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace cogsem {

using TimePoint = std::int64_t;
using SpacePoint = std::vector<std::int64_t>;
using Region = std::set<SpacePoint>;

struct Segment {
  TimePoint start = 0;
  TimePoint end = 0;

  Segment() = default;
  Segment(TimePoint s, TimePoint e) : start(s), end(e) {
    if (s > e) throw std::invalid_argument("segment start after end");
  }
  bool contains(TimePoint t) const noexcept { return start <= t && t <= end; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

struct RegionTopology {
  bool connected = true;
  Region boundary;
  Region interior;
};

// Orthogonal adjacency on the integer grid: a point is interior when all of
// its 2d axis neighbours belong to the region.
RegionTopology region_topology(const Region& r);

// Dimension shared by every point; throws on mixed dimensions. 0 for empty.
std::size_t region_dimension(const Region& r);

}  // namespace cogsem
