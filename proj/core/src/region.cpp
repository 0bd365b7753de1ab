#include "cogsem/region.hpp"

#include <deque>

namespace cogsem {

std::size_t region_dimension(const Region& r) {
  if (r.empty()) return 0;
  std::size_t d = r.begin()->size();
  for (const auto& p : r)
    if (p.size() != d) throw std::invalid_argument("region mixes point dimensions");
  return d;
}

namespace {

template <class F>
void for_each_neighbour(const SpacePoint& p, F&& f) {
  SpacePoint q = p;
  for (std::size_t axis = 0; axis < p.size(); ++axis) {
    for (int step : {-1, 1}) {
      q[axis] = p[axis] + step;
      f(q);
    }
    q[axis] = p[axis];
  }
}

}  // namespace

RegionTopology region_topology(const Region& r) {
  const std::size_t d = region_dimension(r);
  RegionTopology out;

  for (const auto& p : r) {
    bool inner = d > 0;
    for_each_neighbour(p, [&](const SpacePoint& q) { inner = inner && r.count(q) > 0; });
    (inner ? out.interior : out.boundary).insert(p);
  }

  if (r.empty()) return out;
  Region seen{*r.begin()};
  std::deque<SpacePoint> frontier{*r.begin()};
  while (!frontier.empty()) {
    SpacePoint p = std::move(frontier.front());
    frontier.pop_front();
    for_each_neighbour(p, [&](const SpacePoint& q) {
      if (r.count(q) && seen.insert(q).second) frontier.push_back(q);
    });
  }
  out.connected = seen.size() == r.size();
  return out;
}

}  // namespace cogsem
