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


#include "streetnav/caching_providers.h"

#include "absl/strings/str_cat.h"

namespace streetnav {

CachingMapServices::CachingMapServices(MapServices upstream,
                                       LocationCacheOptions options)
    : upstream_(upstream),
      panos_(options),
      pano_grids_(options),
      nearest_(options),
      places_(options),
      place_by_id_(options),
      roads_(options),
      search_(options),
      views_(options) {}

MapServices CachingMapServices::services() const {
  return MapServices{this, this, this, this, this};
}

absl::StatusOr<Panorama> CachingMapServices::GetPanorama(
    const std::string& id) const {
  return panos_.GetOrFetch(MakeCacheKey("pano", id), [&] {
    return upstream_.panoramas->GetPanorama(id);
  });
}

absl::StatusOr<std::vector<PanoHit>> CachingMapServices::PanosInGrid(
    const GeoPoint& center, double half_extent) const {
  return pano_grids_.GetOrFetch(
      MakeCacheKey("panos_in_grid", center, absl::StrCat(half_extent)), [&] {
        return upstream_.panoramas->PanosInGrid(center, half_extent);
      });
}

absl::StatusOr<PanoHit> CachingMapServices::NearestPano(
    const GeoPoint& p) const {
  return nearest_.GetOrFetch(MakeCacheKey("nearest_pano", p), [&] {
    return upstream_.panoramas->NearestPano(p);
  });
}

absl::StatusOr<std::vector<PlaceHit>> CachingMapServices::PlacesNear(
    const GeoPoint& origin, double radius) const {
  return places_.GetOrFetch(
      MakeCacheKey("places_near", origin, absl::StrCat(radius)),
      [&] { return upstream_.places->PlacesNear(origin, radius); });
}

absl::StatusOr<Place> CachingMapServices::GetPlace(
    const std::string& id) const {
  return place_by_id_.GetOrFetch(MakeCacheKey("place", id), [&] {
    return upstream_.places->GetPlace(id);
  });
}

absl::StatusOr<std::vector<Road>> CachingMapServices::RoadsInGrid(
    const GeoPoint& center, double half_extent) const {
  return roads_.GetOrFetch(
      MakeCacheKey("roads_in_grid", center, absl::StrCat(half_extent)),
      [&] { return upstream_.roads->RoadsInGrid(center, half_extent); });
}

absl::StatusOr<std::vector<SearchResult>> CachingMapServices::SearchText(
    const std::string& query) const {
  return search_.GetOrFetch(MakeCacheKey("search_text", query), [&] {
    return upstream_.search->SearchText(query);
  });
}

absl::StatusOr<ViewDescriptor> CachingMapServices::GetView(
    const std::string& pano_id, int octant) const {
  return views_.GetOrFetch(
      MakeCacheKey("view", absl::StrCat(pano_id, "#", octant)),
      [&] { return upstream_.imagery->GetView(pano_id, octant); });
}

CacheStats CachingMapServices::TotalStats() const {
  CacheStats total;
  auto add = [&total](const CacheStats& s) {
    total.hits += s.hits;
    total.misses += s.misses;
    total.evictions += s.evictions;
  };
  add(panos_.stats());
  add(pano_grids_.stats());
  add(nearest_.stats());
  add(places_.stats());
  add(place_by_id_.stats());
  add(roads_.stats());
  add(search_.stats());
  add(views_.stats());
  return total;
}

}  // namespace streetnav
