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


#ifndef STREETNAV_GEO_CONTEXT_H_
#define STREETNAV_GEO_CONTEXT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/geo.h"
#include "streetnav/nav_config.h"
#include "streetnav/providers.h"
#include "streetnav/session_types.h"

namespace streetnav {

// Clause used in prompts when the user has not described themselves.
inline constexpr char kDefaultProfileClause[] =
    "Assume the user is blind and may use a white cane or a guide dog for "
    "mobility.";

struct UserProfile {
  std::optional<std::string> description;

  // The user's own text, or kDefaultProfileClause.
  std::string PromptClause() const;
};

struct GeoContextPlace {
  std::string id;
  std::string name;
  std::string type;
  std::optional<std::string> editorial_summary;
  GeoPoint location;
  double distance_m = 0.0;
  double heading_offset_deg = 0.0;
  RelativePosition relative_position = RelativePosition::kInFront;

  friend bool operator==(const GeoContextPlace&, const GeoContextPlace&) =
      default;
};

// Snapshot of the surroundings attached to every AI request.
struct GeoContext {
  std::string pano_id;
  std::optional<std::string> selected_place;  // display name
  std::string closest_address;
  Heading heading;
  std::string compass;
  std::optional<std::string> neighborhood;
  std::string city;
  std::optional<std::string> state;
  std::string country;
  // Ascending by distance, ties by id; all within nearby_radius.
  std::vector<GeoContextPlace> nearby_places;

  friend bool operator==(const GeoContext&, const GeoContext&) = default;
};

absl::StatusOr<GeoContext> AssembleGeoContext(const SessionState& state,
                                              const MapServices& services,
                                              const NavConfig& cfg);

// Pretty-printed JSON with a stable key order.
std::string GeoContextJson(const GeoContext& ctx);

}  // namespace streetnav

#endif  // STREETNAV_GEO_CONTEXT_H_
