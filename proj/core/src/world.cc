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


#include "streetnav/world.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace streetnav {

namespace {

double MetersToLatDegrees(double m) {
  return (m / kEarthRadiusMeters) * 180.0 / std::numbers::pi;
}

absl::Status CheckPoint(const GeoPoint& p, const std::string& where) {
  auto checked = GeoPoint::Create(p.lat, p.lng);
  if (!checked.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": ", checked.status().message()));
  }
  if (checked->lng != p.lng) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": longitude not normalized: ", p.lng));
  }
  return absl::OkStatus();
}

}  // namespace

std::string StreetAddress::StreetLine() const {
  if (street_number.has_value() && !street_number->empty()) {
    return absl::StrCat(*street_number, " ", road_name);
  }
  return road_name;
}

absl::Status ValidateFixture(const WorldFixture& fixture) {
  if (fixture.meta.schema_version != kFixtureSchemaVersion) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unsupported schema_version ", fixture.meta.schema_version));
  }
  std::set<std::string> pano_ids;
  for (const Panorama& pano : fixture.panos) {
    if (pano.id.empty()) {
      return absl::InvalidArgumentError("panorama with empty id");
    }
    if (!pano_ids.insert(pano.id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate panorama id: ", pano.id));
    }
    if (auto s = CheckPoint(pano.location, "panorama " + pano.id); !s.ok()) {
      return s;
    }
    if (pano.address.road_name.empty() || pano.address.country.empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "panorama ", pano.id, ": address needs road_name and country"));
    }
    if (pano.capture_date.month < 1 || pano.capture_date.month > 12 ||
        pano.capture_date.year <= 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("panorama ", pano.id, ": invalid capture_date"));
    }
  }
  for (const Panorama& pano : fixture.panos) {
    for (const PanoLink& link : pano.links) {
      if (!pano_ids.contains(link.target_id)) {
        return absl::FailedPreconditionError(
            absl::StrCat("panorama ", pano.id,
                         " links to missing panorama id: ", link.target_id));
      }
      if (link.target_id == pano.id) {
        return absl::FailedPreconditionError(
            absl::StrCat("panorama ", pano.id, " links to itself"));
      }
    }
  }
  std::set<std::string> place_ids;
  for (const Place& place : fixture.places) {
    if (place.id.empty() || !place_ids.insert(place.id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing or duplicate place id: '", place.id, "'"));
    }
    if (place.display_name.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("place ", place.id, ": empty display_name"));
    }
    if (auto s = CheckPoint(place.location, "place " + place.id); !s.ok()) {
      return s;
    }
  }
  for (size_t i = 0; i < fixture.roads.size(); ++i) {
    const Road& road = fixture.roads[i];
    const std::string where = absl::StrCat("road '", road.name, "'");
    if (road.name.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("road #", i, ": empty name"));
    }
    if (road.geometry.size() < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": needs at least 2 vertices"));
    }
    for (size_t v = 0; v < road.geometry.size(); ++v) {
      if (auto s = CheckPoint(road.geometry[v], where); !s.ok()) return s;
      if (v > 0 && road.geometry[v] == road.geometry[v - 1]) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, ": repeated vertex ", v));
      }
    }
  }
  for (const auto& [pano_id, views] : fixture.imagery) {
    if (!pano_ids.contains(pano_id)) {
      return absl::FailedPreconditionError(
          absl::StrCat("imagery for missing panorama id: ", pano_id));
    }
  }
  for (const std::string& id : pano_ids) {
    if (!fixture.imagery.contains(id)) {
      return absl::FailedPreconditionError(
          absl::StrCat("panorama ", id, " has no imagery"));
    }
  }
  return absl::OkStatus();
}

void FillDefaultImagery(WorldFixture& fixture) {
  for (const Panorama& pano : fixture.panos) {
    if (fixture.imagery.contains(pano.id)) continue;
    OctantViews views;
    for (int o = 0; o < 8; ++o) {
      views[o].image_ref = absl::StrCat(pano.id, "/", o * 45);
    }
    fixture.imagery.emplace(pano.id, std::move(views));
  }
}

absl::StatusOr<std::shared_ptr<const World>> World::Create(
    WorldFixture fixture) {
  FillDefaultImagery(fixture);
  if (auto s = ValidateFixture(fixture); !s.ok()) return s;
  return std::shared_ptr<const World>(new World(std::move(fixture)));
}

World::World(WorldFixture fixture) : fixture_(std::move(fixture)) {
  for (size_t i = 0; i < fixture_.panos.size(); ++i) {
    pano_index_.emplace(fixture_.panos[i].id, i);
    panos_by_lat_.push_back(i);
  }
  for (size_t i = 0; i < fixture_.places.size(); ++i) {
    place_index_.emplace(fixture_.places[i].id, i);
    places_by_lat_.push_back(i);
  }
  std::sort(panos_by_lat_.begin(), panos_by_lat_.end(),
            [this](size_t a, size_t b) {
              return fixture_.panos[a].location.lat <
                     fixture_.panos[b].location.lat;
            });
  std::sort(places_by_lat_.begin(), places_by_lat_.end(),
            [this](size_t a, size_t b) {
              return fixture_.places[a].location.lat <
                     fixture_.places[b].location.lat;
            });
  for (const Road& road : fixture_.roads) {
    RoadBounds b{90.0, -90.0, 180.0, -180.0};
    for (const GeoPoint& p : road.geometry) {
      b.min_lat = std::min(b.min_lat, p.lat);
      b.max_lat = std::max(b.max_lat, p.lat);
      b.min_lng = std::min(b.min_lng, p.lng);
      b.max_lng = std::max(b.max_lng, p.lng);
    }
    road_bounds_.push_back(b);
  }
}

MapServices World::services() const {
  return MapServices{this, this, this, this, this};
}

const Panorama* World::FindPano(const std::string& id) const {
  auto it = pano_index_.find(id);
  return it == pano_index_.end() ? nullptr : &fixture_.panos[it->second];
}

const Place* World::FindPlace(const std::string& id) const {
  auto it = place_index_.find(id);
  return it == place_index_.end() ? nullptr : &fixture_.places[it->second];
}

std::vector<size_t> World::LatitudeRange(const std::vector<size_t>& sorted,
                                         bool panos, double lo,
                                         double hi) const {
  auto lat_of = [&](size_t i) {
    return panos ? fixture_.panos[i].location.lat
                 : fixture_.places[i].location.lat;
  };
  auto first = std::lower_bound(
      sorted.begin(), sorted.end(), lo,
      [&](size_t i, double v) { return lat_of(i) < v; });
  std::vector<size_t> out;
  for (auto it = first; it != sorted.end() && lat_of(*it) <= hi; ++it) {
    out.push_back(*it);
  }
  return out;
}

absl::StatusOr<Panorama> World::GetPanorama(const std::string& id) const {
  const Panorama* pano = FindPano(id);
  if (pano == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown panorama id: ", id));
  }
  return *pano;
}

absl::StatusOr<std::vector<PanoHit>> World::PanosInGrid(
    const GeoPoint& center, double half_extent) const {
  if (!(half_extent > 0.0)) {
    return absl::InvalidArgumentError("half_extent must be positive");
  }
  const TangentPlane plane(center);
  // Latitude window is exact in the projection; pad for the epsilon.
  const double dlat = MetersToLatDegrees(half_extent + 1e-3);
  std::vector<PanoHit> out;
  for (size_t i :
       LatitudeRange(panos_by_lat_, true, center.lat - dlat, center.lat + dlat)) {
    const Panorama& pano = fixture_.panos[i];
    if (plane.InSquare(pano.location, half_extent)) {
      out.push_back(PanoHit{pano, HaversineDistance(center, pano.location)});
    }
  }
  return out;
}

absl::StatusOr<PanoHit> World::NearestPano(const GeoPoint& p) const {
  const Panorama* best = nullptr;
  double best_d = 0.0;
  for (const Panorama& pano : fixture_.panos) {
    const double d = HaversineDistance(p, pano.location);
    if (best == nullptr || d < best_d || (d == best_d && pano.id < best->id)) {
      best = &pano;
      best_d = d;
    }
  }
  if (best == nullptr) return absl::NotFoundError("world has no panoramas");
  return PanoHit{*best, best_d};
}

absl::StatusOr<std::vector<PlaceHit>> World::PlacesNear(const GeoPoint& origin,
                                                        double radius) const {
  if (!(radius > 0.0)) {
    return absl::InvalidArgumentError("radius must be positive");
  }
  const double dlat = MetersToLatDegrees(radius + 1e-3);
  std::vector<PlaceHit> out;
  for (size_t i : LatitudeRange(places_by_lat_, false, origin.lat - dlat,
                                origin.lat + dlat)) {
    const Place& place = fixture_.places[i];
    const double d = HaversineDistance(origin, place.location);
    if (d <= radius + kDistanceEpsilonMeters) {
      out.push_back(PlaceHit{place, d});
    }
  }
  std::sort(out.begin(), out.end(), [](const PlaceHit& a, const PlaceHit& b) {
    if (a.distance_m != b.distance_m) return a.distance_m < b.distance_m;
    return a.place.id < b.place.id;
  });
  return out;
}

absl::StatusOr<Place> World::GetPlace(const std::string& id) const {
  const Place* place = FindPlace(id);
  if (place == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown place id: ", id));
  }
  return *place;
}

absl::StatusOr<std::vector<Road>> World::RoadsInGrid(const GeoPoint& center,
                                                     double half_extent) const {
  if (!(half_extent > 0.0)) {
    return absl::InvalidArgumentError("half_extent must be positive");
  }
  const TangentPlane plane(center);
  const double dlat = MetersToLatDegrees(half_extent + 1e-3);
  const double cos_lat =
      std::max(std::cos(center.lat * std::numbers::pi / 180.0), 1e-6);
  const double dlng = dlat / cos_lat;
  std::vector<Road> out;
  for (size_t r = 0; r < fixture_.roads.size(); ++r) {
    const RoadBounds& b = road_bounds_[r];
    if (b.max_lat < center.lat - dlat || b.min_lat > center.lat + dlat) {
      continue;
    }
    // Bounding boxes spanning the antimeridian fall through to the exact test.
    if (b.max_lng - b.min_lng < 180.0 &&
        (b.max_lng < center.lng - dlng || b.min_lng > center.lng + dlng)) {
      continue;
    }
    const Road& road = fixture_.roads[r];
    for (size_t v = 1; v < road.geometry.size(); ++v) {
      if (plane.SegmentTouchesSquare(road.geometry[v - 1], road.geometry[v],
                                     half_extent)) {
        out.push_back(road);
        break;
      }
    }
  }
  return out;
}

absl::StatusOr<std::vector<SearchResult>> World::SearchText(
    const std::string& query) const {
  const std::string needle =
      absl::AsciiStrToLower(absl::StripAsciiWhitespace(query));
  if (needle.empty()) return std::vector<SearchResult>{};
  struct Ranked {
    int rank;
    const Place* place;
  };
  std::vector<Ranked> ranked;
  for (const Place& place : fixture_.places) {
    const std::string name = absl::AsciiStrToLower(place.display_name);
    int rank = -1;
    if (name == needle) {
      rank = 0;
    } else if (absl::StartsWith(name, needle)) {
      rank = 1;
    } else if (absl::StrContains(name, needle)) {
      rank = 2;
    }
    if (rank >= 0) ranked.push_back({rank, &place});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.place->id < b.place->id;
  });
  std::vector<SearchResult> out;
  for (const Ranked& r : ranked) {
    const Place& place = *r.place;
    SearchResult result;
    result.display_name = place.display_name;
    result.place_type = place.place_type;
    result.editorial_summary = place.editorial_summary;
    result.location = place.location;
    result.place_id = place.id;
    // Address of the nearest panorama doubles as the formatted address.
    if (auto nearest = NearestPano(place.location); nearest.ok()) {
      const StreetAddress& a = nearest->pano.address;
      result.formatted_address = absl::StrCat(a.StreetLine(), ", ", a.city);
    }
    out.push_back(std::move(result));
  }
  return out;
}

absl::StatusOr<ViewDescriptor> World::GetView(const std::string& pano_id,
                                              int octant) const {
  auto it = fixture_.imagery.find(pano_id);
  if (it == fixture_.imagery.end()) {
    return absl::NotFoundError(absl::StrCat("no imagery for ", pano_id));
  }
  return it->second[((octant % 8) + 8) % 8];
}

}  // namespace streetnav
