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


#ifndef STREETNAV_CACHING_PROVIDERS_H_
#define STREETNAV_CACHING_PROVIDERS_H_

#include <vector>

#include "streetnav/location_cache.h"
#include "streetnav/providers.h"

namespace streetnav {

// Wraps a MapServices bundle so every provider call goes through a
// location-keyed LRU cache. Keys quantize positions to kCacheQuantumDegrees,
// so two queries whose centers fall in the same quantum share a result.
class CachingMapServices final : public PanoramaProvider,
                                 public PlacesProvider,
                                 public RoadsProvider,
                                 public TextSearchProvider,
                                 public ImageryProvider {
 public:
  CachingMapServices(MapServices upstream, LocationCacheOptions options = {});

  MapServices services() const;

  absl::StatusOr<Panorama> GetPanorama(const std::string& id) const override;
  absl::StatusOr<std::vector<PanoHit>> PanosInGrid(
      const GeoPoint& center, double half_extent) const override;
  absl::StatusOr<PanoHit> NearestPano(const GeoPoint& p) const override;
  absl::StatusOr<std::vector<PlaceHit>> PlacesNear(
      const GeoPoint& origin, double radius) const override;
  absl::StatusOr<Place> GetPlace(const std::string& id) const override;
  absl::StatusOr<std::vector<Road>> RoadsInGrid(
      const GeoPoint& center, double half_extent) const override;
  absl::StatusOr<std::vector<SearchResult>> SearchText(
      const std::string& query) const override;
  absl::StatusOr<ViewDescriptor> GetView(const std::string& pano_id,
                                         int octant) const override;

  // Total upstream invocations avoided / made across all caches.
  CacheStats TotalStats() const;

 private:
  MapServices upstream_;
  mutable LocationCache<Panorama> panos_;
  mutable LocationCache<std::vector<PanoHit>> pano_grids_;
  mutable LocationCache<PanoHit> nearest_;
  mutable LocationCache<std::vector<PlaceHit>> places_;
  mutable LocationCache<Place> place_by_id_;
  mutable LocationCache<std::vector<Road>> roads_;
  mutable LocationCache<std::vector<SearchResult>> search_;
  mutable LocationCache<ViewDescriptor> views_;
};

}  // namespace streetnav

#endif  // STREETNAV_CACHING_PROVIDERS_H_
