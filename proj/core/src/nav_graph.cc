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


#include "streetnav/nav_graph.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace streetnav {

namespace {

void SortById(std::vector<GraphNeighbor>& neighbors) {
  std::sort(neighbors.begin(), neighbors.end(),
            [](const GraphNeighbor& a, const GraphNeighbor& b) {
              return a.pano_id < b.pano_id;
            });
}

// Adds `pano` as a neighbor unless it coincides with the origin.
void AddNeighbor(const Panorama& origin, const Panorama& pano,
                 bool built_in_link, std::optional<Heading> link_heading,
                 std::vector<GraphNeighbor>& out) {
  const double d = HaversineDistance(origin.location, pano.location);
  Heading bearing;
  if (auto b = InitialBearing(origin.location, pano.location); b.ok()) {
    bearing = *b;
  } else if (link_heading.has_value()) {
    bearing = *link_heading;
  } else {
    return;
  }
  out.push_back(GraphNeighbor{pano.id, d, bearing, pano.address.road_name,
                              built_in_link});
}

std::optional<std::string> ClosestWithin(const EgocentricGraph& graph,
                                         Heading heading,
                                         const NavConfig& cfg) {
  const GraphNeighbor* best = nullptr;
  for (const GraphNeighbor& n : graph.neighbors) {
    const double offset = RelativeHeading(n.bearing, heading);
    if (std::abs(offset) > cfg.forward_tolerance_deg + kAngleEpsilonDegrees) {
      continue;
    }
    if (best == nullptr || n.distance_m < best->distance_m ||
        (n.distance_m == best->distance_m && n.pano_id < best->pano_id)) {
      best = &n;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->pano_id;
}

// Distinct names ignoring case, first spelling kept, sorted ignoring case.
std::vector<std::string> DistinctRoadNames(const std::vector<Road>& roads) {
  std::vector<std::string> names;
  absl::flat_hash_set<std::string> seen;
  for (const Road& r : roads) {
    if (seen.insert(absl::AsciiStrToLower(r.name)).second) {
      names.push_back(r.name);
    }
  }
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) {
              return absl::AsciiStrToLower(a) < absl::AsciiStrToLower(b);
            });
  return names;
}

absl::StatusOr<std::optional<IntersectionHit>> GridHit(
    const MapServices& services, const GeoPoint& center, const NavConfig& cfg,
    const std::string* exclude_pano) {
  auto roads = services.roads->RoadsInGrid(center, cfg.half_grid());
  if (!roads.ok()) return roads.status();
  std::vector<std::string> names = DistinctRoadNames(*roads);
  if (names.size() < 2) return std::optional<IntersectionHit>();

  auto panos = services.panoramas->PanosInGrid(center, cfg.half_grid());
  if (!panos.ok()) return panos.status();
  std::sort(panos->begin(), panos->end(),
            [](const PanoHit& a, const PanoHit& b) {
              if (a.distance_m != b.distance_m) {
                return a.distance_m < b.distance_m;
              }
              return a.pano.id < b.pano.id;
            });
  for (const PanoHit& hit : *panos) {
    if (exclude_pano != nullptr && hit.pano.id == *exclude_pano) continue;
    auto graph = BuildEgocentricGraph(services, hit.pano, cfg);
    if (!graph.ok()) return graph.status();
    const bool qualifies = std::any_of(
        graph->neighbors.begin(), graph->neighbors.end(),
        [&](const GraphNeighbor& n) {
          return !SameRoad(n.road_name, hit.pano.address.road_name);
        });
    if (qualifies) {
      IntersectionHit out;
      out.location = center;
      out.pano_id = hit.pano.id;
      out.road_names = std::move(names);
      return std::optional<IntersectionHit>(std::move(out));
    }
  }
  return std::optional<IntersectionHit>();
}

bool SameRoadSet(const std::vector<std::string>& a,
                 const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (const std::string& name : a) {
    if (std::none_of(b.begin(), b.end(), [&](const std::string& other) {
          return absl::EqualsIgnoreCase(name, other);
        })) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool SameRoad(const std::string& a, const std::string& b) {
  return absl::EqualsIgnoreCase(a, b);
}

const GraphNeighbor* EgocentricGraph::Find(const std::string& pano_id) const {
  auto it = std::lower_bound(
      neighbors.begin(), neighbors.end(), pano_id,
      [](const GraphNeighbor& n, const std::string& id) {
        return n.pano_id < id;
      });
  if (it == neighbors.end() || it->pano_id != pano_id) return nullptr;
  return &*it;
}

absl::StatusOr<EgocentricGraph> BuildEgocentricGraph(
    const MapServices& services, const Panorama& origin,
    const NavConfig& cfg) {
  EgocentricGraph graph;
  graph.origin_pano_id = origin.id;
  auto grid = services.panoramas->PanosInGrid(origin.location, cfg.half_grid());
  if (!grid.ok()) return grid.status();
  absl::flat_hash_set<std::string> seen = {origin.id};
  for (const PanoHit& hit : *grid) {
    if (!seen.insert(hit.pano.id).second) continue;
    AddNeighbor(origin, hit.pano, /*built_in_link=*/false, std::nullopt,
                graph.neighbors);
  }
  for (const PanoLink& link : origin.links) {
    if (!seen.insert(link.target_id).second) {
      for (GraphNeighbor& n : graph.neighbors) {
        if (n.pano_id == link.target_id) n.built_in_link = true;
      }
      continue;
    }
    auto target = services.panoramas->GetPanorama(link.target_id);
    if (!target.ok()) return target.status();
    AddNeighbor(origin, *target, /*built_in_link=*/true, link.heading,
                graph.neighbors);
  }
  SortById(graph.neighbors);
  return graph;
}

absl::StatusOr<EgocentricGraph> BuildLinkOnlyGraph(const MapServices& services,
                                                   const Panorama& origin) {
  EgocentricGraph graph;
  graph.origin_pano_id = origin.id;
  absl::flat_hash_set<std::string> seen = {origin.id};
  for (const PanoLink& link : origin.links) {
    if (!seen.insert(link.target_id).second) continue;
    auto target = services.panoramas->GetPanorama(link.target_id);
    if (!target.ok()) return target.status();
    AddNeighbor(origin, *target, /*built_in_link=*/true, link.heading,
                graph.neighbors);
  }
  SortById(graph.neighbors);
  return graph;
}

std::optional<std::string> NextPano(const EgocentricGraph& graph,
                                    Heading heading, const NavConfig& cfg) {
  return ClosestWithin(graph, heading, cfg);
}

std::optional<std::string> PrevPano(const EgocentricGraph& graph,
                                    Heading heading, const NavConfig& cfg) {
  return ClosestWithin(graph, heading.Rotated(180.0), cfg);
}

std::vector<Heading> AvailableMovements(const EgocentricGraph& graph,
                                        const NavConfig& cfg) {
  std::vector<Heading> out;
  for (int o = 0; o < 8; ++o) {
    const Heading h = Heading::FromOctant(o);
    if (NextPano(graph, h, cfg).has_value()) out.push_back(h);
  }
  return out;
}

absl::StatusOr<std::optional<IntersectionHit>> IntersectionInGrid(
    const MapServices& services, const GeoPoint& center,
    const NavConfig& cfg) {
  return GridHit(services, center, cfg, nullptr);
}

namespace {

absl::StatusOr<std::optional<IntersectionHit>> DetectIntersectionAlongFrom(
    const MapServices& services, const GeoPoint& origin, Heading heading,
    const NavConfig& cfg, const std::string* exclude_pano,
    const std::vector<std::string>* skip_roads) {
  for (int k = 1; k * cfg.ray_step_m <= cfg.jump_max_m + kDistanceEpsilonMeters;
       ++k) {
    const double along = k * cfg.ray_step_m;
    const GeoPoint sample = DestinationPoint(origin, heading, along);
    auto hit = GridHit(services, sample, cfg, exclude_pano);
    if (!hit.ok()) return hit.status();
    if (hit->has_value() && skip_roads != nullptr &&
        SameRoadSet((*hit)->road_names, *skip_roads)) {
      continue;
    }
    if (hit->has_value()) {
      (*hit)->distance_from_origin_m = along;
      (*hit)->sample_index = k;
      return hit;
    }
  }
  return std::optional<IntersectionHit>();
}

}  // namespace

absl::StatusOr<std::optional<IntersectionHit>> DetectIntersectionAlong(
    const MapServices& services, const GeoPoint& origin, Heading heading,
    const NavConfig& cfg) {
  return DetectIntersectionAlongFrom(services, origin, heading, cfg, nullptr,
                                     nullptr);
}

absl::StatusOr<std::optional<IntersectionHit>> DetectNextIntersection(
    const MapServices& services, const GeoPoint& origin, Heading heading,
    const NavConfig& cfg, const std::vector<std::string>& skip_roads) {
  return DetectIntersectionAlongFrom(services, origin, heading, cfg, nullptr,
                                     &skip_roads);
}

absl::StatusOr<std::optional<JumpTarget>> FindJumpTarget(
    const MapServices& services, const Panorama& origin, Heading heading,
    const NavConfig& cfg) {
  auto hit = DetectIntersectionAlongFrom(services, origin.location, heading,
                                         cfg, &origin.id, nullptr);
  if (!hit.ok()) return hit.status();
  if (hit->has_value()) {
    auto pano = services.panoramas->GetPanorama((*hit)->pano_id);
    if (!pano.ok()) return pano.status();
    JumpTarget target;
    target.pano_id = pano->id;
    target.kind = JumpKind::kToIntersection;
    target.distance_m = HaversineDistance(origin.location, pano->location);
    target.intersection = std::move(**hit);
    return std::optional<JumpTarget>(std::move(target));
  }

  auto candidates =
      services.panoramas->PanosInGrid(origin.location, cfg.jump_max_m);
  if (!candidates.ok()) return candidates.status();
  const PanoHit* best = nullptr;
  for (const PanoHit& c : *candidates) {
    if (c.pano.id == origin.id) continue;
    if (c.distance_m > cfg.jump_max_m + kDistanceEpsilonMeters) continue;
    auto bearing = InitialBearing(origin.location, c.pano.location);
    if (!bearing.ok()) continue;
    if (std::abs(RelativeHeading(*bearing, heading)) >
        cfg.forward_tolerance_deg + kAngleEpsilonDegrees) {
      continue;
    }
    if (best == nullptr || c.distance_m > best->distance_m ||
        (c.distance_m == best->distance_m && c.pano.id < best->pano.id)) {
      best = &c;
    }
  }
  if (best == nullptr) return std::optional<JumpTarget>();
  JumpTarget target;
  target.pano_id = best->pano.id;
  target.kind = JumpKind::kMaxDistance;
  target.distance_m = best->distance_m;
  return std::optional<JumpTarget>(std::move(target));
}

}  // namespace streetnav
