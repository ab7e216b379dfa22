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


#ifndef STREETNAV_WORLD_H_
#define STREETNAV_WORLD_H_

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "streetnav/providers.h"
#include "streetnav/world_types.h"

namespace streetnav {

// Checks every WorldFixture invariant: unique ids, valid coordinates, link
// targets and imagery keys that exist, road geometry, required address
// fields. Errors name the offending id.
absl::Status ValidateFixture(const WorldFixture& fixture);

// Fills missing imagery entries with eight empty descriptors.
void FillDefaultImagery(WorldFixture& fixture);

// Immutable in-memory world backed by a validated fixture. Implements every
// provider interface; safe to share across threads.
class World final : public PanoramaProvider,
                    public PlacesProvider,
                    public RoadsProvider,
                    public TextSearchProvider,
                    public ImageryProvider {
 public:
  static absl::StatusOr<std::shared_ptr<const World>> Create(
      WorldFixture fixture);

  const WorldFixture& fixture() const { return fixture_; }
  size_t pano_count() const { return fixture_.panos.size(); }

  // Borrowed lookup; nullptr if absent.
  const Panorama* FindPano(const std::string& id) const;
  const Place* FindPlace(const std::string& id) const;

  MapServices services() const;

  // PanoramaProvider
  absl::StatusOr<Panorama> GetPanorama(const std::string& id) const override;
  absl::StatusOr<std::vector<PanoHit>> PanosInGrid(
      const GeoPoint& center, double half_extent) const override;
  absl::StatusOr<PanoHit> NearestPano(const GeoPoint& p) const override;

  // PlacesProvider
  absl::StatusOr<std::vector<PlaceHit>> PlacesNear(
      const GeoPoint& origin, double radius) const override;
  absl::StatusOr<Place> GetPlace(const std::string& id) const override;

  // RoadsProvider
  absl::StatusOr<std::vector<Road>> RoadsInGrid(
      const GeoPoint& center, double half_extent) const override;

  // TextSearchProvider: case-insensitive match on place names; exact matches
  // rank before prefix matches before substring matches, then by id.
  absl::StatusOr<std::vector<SearchResult>> SearchText(
      const std::string& query) const override;

  // ImageryProvider
  absl::StatusOr<ViewDescriptor> GetView(const std::string& pano_id,
                                         int octant) const override;

 private:
  explicit World(WorldFixture fixture);

  struct RoadBounds {
    double min_lat, max_lat, min_lng, max_lng;
  };

  // Indices into fixture_.panos / places, sorted by latitude.
  std::vector<size_t> LatitudeRange(const std::vector<size_t>& sorted,
                                    bool panos, double lo, double hi) const;

  WorldFixture fixture_;
  std::unordered_map<std::string, size_t> pano_index_;
  std::unordered_map<std::string, size_t> place_index_;
  std::vector<size_t> panos_by_lat_;
  std::vector<size_t> places_by_lat_;
  std::vector<RoadBounds> road_bounds_;
};

}  // namespace streetnav

#endif  // STREETNAV_WORLD_H_
