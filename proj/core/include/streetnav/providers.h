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


#ifndef STREETNAV_PROVIDERS_H_
#define STREETNAV_PROVIDERS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/geo.h"
#include "streetnav/world_types.h"

namespace streetnav {

// Map-service interfaces. The synthetic World implements all of them from a
// single fixture; a live adapter implements them over remote services. All
// methods must be safe to call concurrently.
//
// Contract shared by every implementation:
//  - "grid" queries use the square of half side `half_extent` meters around
//    `center` in the local tangent plane, boundary inclusive.
//  - radius queries are inclusive (d <= radius) and use haversine distance.
//  - results are deterministic for identical arguments.

struct PanoHit {
  Panorama pano;
  double distance_m = 0.0;  // haversine distance from the query center
};

struct PlaceHit {
  Place place;
  double distance_m = 0.0;
};

class PanoramaProvider {
 public:
  virtual ~PanoramaProvider() = default;

  // NotFound if the id is unknown.
  virtual absl::StatusOr<Panorama> GetPanorama(const std::string& id) const = 0;

  // Unordered set of panoramas inside the grid square.
  virtual absl::StatusOr<std::vector<PanoHit>> PanosInGrid(
      const GeoPoint& center, double half_extent) const = 0;

  // Closest panorama, ties by lexicographic id. NotFound for an empty world.
  virtual absl::StatusOr<PanoHit> NearestPano(const GeoPoint& p) const = 0;
};

class PlacesProvider {
 public:
  virtual ~PlacesProvider() = default;

  // Sorted ascending by distance, ties by place id.
  virtual absl::StatusOr<std::vector<PlaceHit>> PlacesNear(
      const GeoPoint& origin, double radius) const = 0;

  virtual absl::StatusOr<Place> GetPlace(const std::string& id) const = 0;
};

class RoadsProvider {
 public:
  virtual ~RoadsProvider() = default;

  // Roads with at least one polyline segment touching the grid square.
  virtual absl::StatusOr<std::vector<Road>> RoadsInGrid(
      const GeoPoint& center, double half_extent) const = 0;
};

struct SearchResult {
  std::string display_name;
  std::string formatted_address;
  std::string place_type;
  std::optional<std::string> editorial_summary;
  GeoPoint location;
  std::optional<std::string> place_id;
};

class TextSearchProvider {
 public:
  virtual ~TextSearchProvider() = default;

  // Best match first; empty when nothing matches.
  virtual absl::StatusOr<std::vector<SearchResult>> SearchText(
      const std::string& query) const = 0;
};

class ImageryProvider {
 public:
  virtual ~ImageryProvider() = default;

  virtual absl::StatusOr<ViewDescriptor> GetView(const std::string& pano_id,
                                                 int octant) const = 0;
};

// Non-owning bundle of the providers a session talks to.
struct MapServices {
  const PanoramaProvider* panoramas = nullptr;
  const PlacesProvider* places = nullptr;
  const RoadsProvider* roads = nullptr;
  const TextSearchProvider* search = nullptr;
  const ImageryProvider* imagery = nullptr;
};

}  // namespace streetnav

#endif  // STREETNAV_PROVIDERS_H_
