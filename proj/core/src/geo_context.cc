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


#include "streetnav/geo_context.h"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace streetnav {

std::string UserProfile::PromptClause() const {
  if (description.has_value() && !description->empty()) return *description;
  return kDefaultProfileClause;
}

absl::StatusOr<GeoContext> AssembleGeoContext(const SessionState& state,
                                              const MapServices& services,
                                              const NavConfig& cfg) {
  auto pano = services.panoramas->GetPanorama(state.current_pano_id);
  if (!pano.ok()) return pano.status();
  GeoContext ctx;
  ctx.pano_id = pano->id;
  ctx.closest_address = pano->address.StreetLine();
  ctx.heading = state.heading;
  ctx.compass = CompassName(state.heading);
  ctx.neighborhood = pano->address.neighborhood;
  ctx.city = pano->address.city;
  ctx.state = pano->address.state_province;
  ctx.country = pano->address.country;
  if (state.selected_place.has_value()) {
    if (auto place = services.places->GetPlace(*state.selected_place);
        place.ok()) {
      ctx.selected_place = place->display_name;
    }
  }
  auto hits = services.places->PlacesNear(pano->location, cfg.nearby_radius_m);
  if (!hits.ok()) return hits.status();
  for (const PlaceHit& hit : *hits) {
    GeoContextPlace p;
    p.id = hit.place.id;
    p.name = hit.place.display_name;
    p.type = hit.place.place_type;
    p.editorial_summary = hit.place.editorial_summary;
    p.location = hit.place.location;
    p.distance_m = hit.distance_m;
    if (auto b = InitialBearing(pano->location, hit.place.location); b.ok()) {
      p.heading_offset_deg = RelativeHeading(*b, state.heading);
    }
    p.relative_position = RelativePositionOf(p.heading_offset_deg);
    ctx.nearby_places.push_back(std::move(p));
  }
  // Providers already sort this way; restated so the contract does not
  // depend on them.
  std::stable_sort(ctx.nearby_places.begin(), ctx.nearby_places.end(),
                   [](const GeoContextPlace& a, const GeoContextPlace& b) {
                     if (a.distance_m != b.distance_m) {
                       return a.distance_m < b.distance_m;
                     }
                     return a.id < b.id;
                   });
  return ctx;
}

std::string GeoContextJson(const GeoContext& ctx) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["selected_place"] =
      ctx.selected_place.has_value() ? Json(*ctx.selected_place) : Json();
  j["closest_address"] = ctx.closest_address;
  j["heading"] = ctx.heading.degrees();
  j["compass"] = ctx.compass;
  j["neighborhood"] =
      ctx.neighborhood.has_value() ? Json(*ctx.neighborhood) : Json();
  j["city"] = ctx.city;
  j["state"] = ctx.state.has_value() ? Json(*ctx.state) : Json();
  j["country"] = ctx.country;
  Json places = Json::array();
  for (const GeoContextPlace& p : ctx.nearby_places) {
    Json e;
    e["name"] = p.name;
    e["type"] = p.type;
    e["editorial_summary"] = p.editorial_summary.has_value()
                                 ? Json(*p.editorial_summary)
                                 : Json();
    e["location"] = {{"lat", std::round(p.location.lat * 1e7) / 1e7},
                     {"lng", std::round(p.location.lng * 1e7) / 1e7}};
    e["distance_m"] = std::round(p.distance_m * 10.0) / 10.0;
    e["heading_offset_deg"] = std::round(p.heading_offset_deg * 10.0) / 10.0;
    e["relative_position"] = RelativePositionName(p.relative_position);
    places.push_back(std::move(e));
  }
  j["nearby_places"] = std::move(places);
  return j.dump(2);
}

}  // namespace streetnav
