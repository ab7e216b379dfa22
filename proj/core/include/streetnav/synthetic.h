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


#ifndef STREETNAV_SYNTHETIC_H_
#define STREETNAV_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "streetnav/geo.h"
#include "streetnav/world_types.h"

namespace streetnav::synthetic {

// Deterministic synthetic worlds used by tests, benchmarks and demos. All
// geometry is laid out in a local east/north meter frame around an anchor
// point and converted with OffsetMeters.

inline const GeoPoint kDefaultAnchor{47.6205, -122.3493};

struct LatticeCityOptions {
  int rows = 50;
  int cols = 50;
  double spacing_m = 10.0;
  // Every `road_every`-th row and column carries a road; panoramas exist
  // only on roads. 1 gives a full lattice.
  int road_every = 1;
  // Probability that a built-in link between adjacent panoramas is kept.
  double link_keep_probability = 1.0;
  int places = 0;
  // Probability that an octant view carries each vocabulary tag.
  double tag_probability = 0.0;
  uint64_t seed = 1;
  GeoPoint anchor = kDefaultAnchor;
};

// Pano ids are "p<row>_<col>" zero padded to three digits; row 0 is the
// southern edge, col 0 the western edge. Horizontal roads are "Street <r>",
// vertical roads "Avenue <c>"; a panorama on both is addressed to its Street.
WorldFixture MakeLatticeCity(const LatticeCityOptions& options);
std::string LatticePanoId(int row, int col);

// The three four-way intersection layouts of the link-sparsity figure. The
// center panorama "c" sits where "North-South Street" crosses "East-West
// Street"; arms carry panoramas at 8 m and 18 m. Built-in links of "c":
//   kFullyLinked: north, south, east, west
//   kEastWestOnly: east, west
//   kTwoLinks: north, east
enum class FourWayLayout { kFullyLinked, kEastWestOnly, kTwoLinks };
WorldFixture MakeFourWayIntersection(FourWayLayout layout);

// "Main Street" runs north from "m000" with panoramas every 10 m up to
// 100 m. "Cross Street" crosses it `cross_at_m` north of the origin with an
// intersection panorama "x_int" on Main Street and panoramas 10 m and 20 m
// east/west of the crossing.
WorldFixture MakeCrossroads(double cross_at_m = 41.0);

// One road running north with panoramas every `spacing_m` up to `length_m`.
// Ids are "s000", "s010", ... (the meter offset).
WorldFixture MakeStraightRoad(double length_m = 150.0, double spacing_m = 10.0);

// "Lower Road" runs north; "Upper Road" passes over it east-west at 45 m. No
// panorama is addressed on both roads and no links connect them.
WorldFixture MakeBridge();

// Two distant neighborhoods: around the Acropolis of Athens and around
// 38 Bankside, London, with the places and movement options of the
// teleport walkthrough.
WorldFixture MakeTeleportDemoWorld();

// Annotation-complete scenes: a campus bus stop, a residential playground
// and a restaurant, each with per-octant ground-truth tags.
WorldFixture MakePoiScenarioWorld();

// Named worlds for the CLI and the checked-in fixtures: "teleport-demo",
// "poi-scenarios", "crossroads", "straight-road", "bridge",
// "four-way-full", "four-way-east-west", "four-way-two-links" and
// "lattice-50" (a 50x50 grid with places and tags).
const std::vector<std::string>& BuiltinWorldNames();
std::optional<WorldFixture> BuiltinWorld(const std::string& name);

// Vocabulary used for random tags and for truthfulness sweeps.
const std::vector<std::string>& TagVocabulary();

}  // namespace streetnav::synthetic

#endif  // STREETNAV_SYNTHETIC_H_
