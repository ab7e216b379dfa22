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


#ifndef STREETNAV_WORLD_TYPES_H_
#define STREETNAV_WORLD_TYPES_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streetnav/geo.h"

namespace streetnav {

struct YearMonth {
  int year = 0;
  int month = 1;  // 1..12

  friend bool operator==(const YearMonth&, const YearMonth&) = default;
};

struct StreetAddress {
  std::optional<std::string> street_number;
  std::string road_name;
  std::optional<std::string> neighborhood;
  std::string city;
  std::optional<std::string> state_province;
  std::string country;

  // "38 Bankside" or just the road name.
  std::string StreetLine() const;

  friend bool operator==(const StreetAddress&, const StreetAddress&) = default;
};

struct PanoLink {
  std::string target_id;
  Heading heading;
  std::string description;

  friend bool operator==(const PanoLink&, const PanoLink&) = default;
};

struct Panorama {
  std::string id;
  GeoPoint location;
  std::vector<PanoLink> links;
  StreetAddress address;
  YearMonth capture_date;
  std::optional<std::string> photographer;

  friend bool operator==(const Panorama&, const Panorama&) = default;
};

struct Place {
  std::string id;
  std::string display_name;
  std::string place_type;  // e.g. "performing_arts_theater"
  GeoPoint location;
  std::optional<std::string> editorial_summary;

  friend bool operator==(const Place&, const Place&) = default;
};

struct Road {
  std::string name;
  std::vector<GeoPoint> geometry;

  friend bool operator==(const Road&, const Road&) = default;
};

// One flat crop of a panorama. Tags are ground-truth annotations standing in
// for what a vision model would see ("bench", "bike_rack", ...).
struct ViewDescriptor {
  std::string image_ref;
  std::vector<std::string> tags;

  friend bool operator==(const ViewDescriptor&, const ViewDescriptor&) =
      default;
};

using OctantViews = std::array<ViewDescriptor, 8>;

struct FixtureMeta {
  int schema_version = 1;
  std::string name;

  friend bool operator==(const FixtureMeta&, const FixtureMeta&) = default;
};

inline constexpr int kFixtureSchemaVersion = 1;

struct WorldFixture {
  FixtureMeta meta;
  std::vector<Panorama> panos;
  std::vector<Place> places;
  std::vector<Road> roads;
  std::map<std::string, OctantViews> imagery;

  friend bool operator==(const WorldFixture&, const WorldFixture&) = default;
};

// The image the AI sees for one (pano, heading).
struct ViewCapture {
  std::string pano_id;
  Heading heading;
  int width = 640;
  int height = 640;
  std::string image_ref;

  friend bool operator==(const ViewCapture&, const ViewCapture&) = default;
};

}  // namespace streetnav

#endif  // STREETNAV_WORLD_TYPES_H_
