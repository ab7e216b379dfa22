// Copyright 2026 The streetnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef STREETNAV_NAV_GRAPH_H_
#define STREETNAV_NAV_GRAPH_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/geo.h"
#include "streetnav/nav_config.h"
#include "streetnav/providers.h"
#include "streetnav/world_types.h"

namespace streetnav {

struct GraphNeighbor {
  std::string pano_id;
  double distance_m = 0.0;
  Heading bearing;  // absolute, from the origin
  // Road of the neighbor's address; used for intersection detection.
  std::string road_name;
  bool built_in_link = false;

  friend bool operator==(const GraphNeighbor&, const GraphNeighbor&) = default;
};

// Reachable panoramas around one position. Sorted by pano id.
struct EgocentricGraph {
  std::string origin_pano_id;
  std::vector<GraphNeighbor> neighbors;

  const GraphNeighbor* Find(const std::string& pano_id) const;
};

struct IntersectionHit {
  GeoPoint location;  // center of the grid that produced the hit
  std::string pano_id;
  std::vector<std::string> road_names;  // >= 2, distinct ignoring case
  double distance_from_origin_m = 0.0;
  int sample_index = 0;  // k of the ray sample; 0 means "here"

  friend bool operator==(const IntersectionHit&, const IntersectionHit&) =
      default;
};

enum class JumpKind { kToIntersection, kMaxDistance };

struct JumpTarget {
  std::string pano_id;
  JumpKind kind = JumpKind::kMaxDistance;
  double distance_m = 0.0;
  std::optional<IntersectionHit> intersection;
};

// Neighbors = panoramas inside the grid_extent square around the origin plus
// every built-in link target, each with haversine distance and bearing.
absl::StatusOr<EgocentricGraph> BuildEgocentricGraph(
    const MapServices& services, const Panorama& origin, const NavConfig& cfg);

// Baseline that follows built-in links only.
absl::StatusOr<EgocentricGraph> BuildLinkOnlyGraph(const MapServices& services,
                                                   const Panorama& origin);

// Closest neighbor whose bearing is within forward_tolerance of `heading`
// (inclusive); ties by id.
std::optional<std::string> NextPano(const EgocentricGraph& graph,
                                    Heading heading, const NavConfig& cfg);

// NextPano evaluated at heading + 180.
std::optional<std::string> PrevPano(const EgocentricGraph& graph,
                                    Heading heading, const NavConfig& cfg);

// Octant headings with a NextPano, clockwise from North.
std::vector<Heading> AvailableMovements(const EgocentricGraph& graph,
                                        const NavConfig& cfg);

// Whether the grid around `center` holds an intersection: two or more
// distinct road names and a panorama with a graph neighbor on a different
// road. Among qualifying panoramas the one nearest `center` wins.
absl::StatusOr<std::optional<IntersectionHit>> IntersectionInGrid(
    const MapServices& services, const GeoPoint& center, const NavConfig& cfg);

// Casts a ray from `origin` along `heading`, testing grids at k * ray_step for
// k = 1, 2, ... while k * ray_step <= jump_max. Returns the first hit.
absl::StatusOr<std::optional<IntersectionHit>> DetectIntersectionAlong(
    const MapServices& services, const GeoPoint& origin, Heading heading,
    const NavConfig& cfg);

// Next intersection along the heading, otherwise the farthest panorama within
// forward_tolerance and jump_max. nullopt when nothing is reachable.
// DetectIntersectionAlong, skipping grids whose road names equal
// `skip_roads` ignoring case (typically the intersection the user is at).
absl::StatusOr<std::optional<IntersectionHit>> DetectNextIntersection(
    const MapServices& services, const GeoPoint& origin, Heading heading,
    const NavConfig& cfg, const std::vector<std::string>& skip_roads);

absl::StatusOr<std::optional<JumpTarget>> FindJumpTarget(
    const MapServices& services, const Panorama& origin, Heading heading,
    const NavConfig& cfg);

// Case-insensitive road identity.
bool SameRoad(const std::string& a, const std::string& b);

}  // namespace streetnav

#endif  // STREETNAV_NAV_GRAPH_H_
