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


#include "streetnav/synthetic.h"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "streetnav/world.h"

namespace streetnav::synthetic {

namespace {

struct Builder {
  GeoPoint anchor;
  WorldFixture fixture;

  GeoPoint At(double east, double north) const {
    return OffsetMeters(anchor, east, north);
  }

  Panorama& AddPano(const std::string& id, double east, double north,
                    const std::string& road, const std::string& city,
                    const std::string& country) {
    Panorama p;
    p.id = id;
    p.location = At(east, north);
    p.address.road_name = road;
    p.address.city = city;
    p.address.country = country;
    p.capture_date = YearMonth{2025, 2};
    p.photographer = "Google";
    fixture.panos.push_back(std::move(p));
    return fixture.panos.back();
  }

  Panorama& Pano(const std::string& id) {
    for (Panorama& p : fixture.panos) {
      if (p.id == id) return p;
    }
    return fixture.panos.front();
  }

  void Link(const std::string& from, const std::string& to) {
    Panorama& a = Pano(from);
    const Panorama& b = Pano(to);
    auto bearing = InitialBearing(a.location, b.location);
    a.links.push_back(PanoLink{to, bearing.ok() ? *bearing : Heading(),
                               b.address.road_name});
  }

  void LinkBoth(const std::string& a, const std::string& b) {
    Link(a, b);
    Link(b, a);
  }

  void AddRoad(const std::string& name,
               std::vector<std::pair<double, double>> pts) {
    Road r;
    r.name = name;
    for (auto [e, n] : pts) r.geometry.push_back(At(e, n));
    fixture.roads.push_back(std::move(r));
  }

  void AddPlace(const std::string& id, const std::string& name,
                const std::string& type, double east, double north,
                std::optional<std::string> summary = std::nullopt) {
    fixture.places.push_back(
        Place{id, name, type, At(east, north), std::move(summary)});
  }

  void SetViews(const std::string& pano_id,
                std::map<int, std::vector<std::string>> tags) {
    OctantViews views;
    for (int o = 0; o < 8; ++o) {
      views[o].image_ref = absl::StrCat(pano_id, "/", o * 45);
      if (auto it = tags.find(o); it != tags.end()) views[o].tags = it->second;
    }
    fixture.imagery[pano_id] = std::move(views);
  }

  WorldFixture Finish(const std::string& name) {
    fixture.meta.name = name;
    FillDefaultImagery(fixture);
    return std::move(fixture);
  }
};

const std::vector<std::string>& PlaceTypes() {
  static const std::vector<std::string> kTypes = {
      "cafe", "restaurant", "bakery", "pharmacy", "library",
      "park", "bus_station", "book_store", "bank", "post_office"};
  return kTypes;
}

}  // namespace

const std::vector<std::string>& TagVocabulary() {
  static const std::vector<std::string> kTags = {
      "bench",         "bus_shelter",      "garbage_can",  "sidewalk",
      "crosswalk",     "slide",            "swing",        "climbing_structure",
      "grass",         "wood_chips",       "bike_rack",    "parking_lot",
      "mural",         "awning",           "outdoor_seating", "fire_hydrant",
      "traffic_light", "stairs",           "fountain",     "tree",
      "curb_ramp",     "construction",     "pole",         "parked_car"};
  return kTags;
}

std::string LatticePanoId(int row, int col) {
  return absl::StrFormat("p%03d_%03d", row, col);
}

WorldFixture MakeLatticeCity(const LatticeCityOptions& o) {
  Builder b{o.anchor, {}};
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int every = std::max(1, o.road_every);
  auto on_row_road = [&](int r) { return r % every == 0; };
  auto on_col_road = [&](int c) { return c % every == 0; };
  auto exists = [&](int r, int c) {
    return r >= 0 && c >= 0 && r < o.rows && c < o.cols &&
           (on_row_road(r) || on_col_road(c));
  };

  for (int r = 0; r < o.rows; ++r) {
    for (int c = 0; c < o.cols; ++c) {
      if (!exists(r, c)) continue;
      const bool row_road = on_row_road(r);
      const std::string road = row_road ? absl::StrCat("Street ", r)
                                        : absl::StrCat("Avenue ", c);
      Panorama& p = b.AddPano(LatticePanoId(r, c), c * o.spacing_m,
                              r * o.spacing_m, road, "Lattice City", "Testland");
      p.address.street_number = absl::StrCat(row_road ? (c + 1) * 2 : (r + 1) * 2);
      p.capture_date = YearMonth{2020 + (r + c) % 5, 1 + (r * 7 + c) % 12};
    }
  }
  // Links between lattice neighbors along a shared road.
  for (int r = 0; r < o.rows; ++r) {
    for (int c = 0; c < o.cols; ++c) {
      if (!exists(r, c)) continue;
      if (on_row_road(r) && exists(r, c + 1) &&
          unit(rng) < o.link_keep_probability) {
        b.LinkBoth(LatticePanoId(r, c), LatticePanoId(r, c + 1));
      }
      if (on_col_road(c) && exists(r + 1, c) &&
          unit(rng) < o.link_keep_probability) {
        b.LinkBoth(LatticePanoId(r, c), LatticePanoId(r + 1, c));
      }
    }
  }
  const double width = (o.cols - 1) * o.spacing_m;
  const double height = (o.rows - 1) * o.spacing_m;
  for (int r = 0; r < o.rows; r += every) {
    b.AddRoad(absl::StrCat("Street ", r),
              {{0.0, r * o.spacing_m}, {std::max(width, 1.0), r * o.spacing_m}});
  }
  for (int c = 0; c < o.cols; c += every) {
    b.AddRoad(absl::StrCat("Avenue ", c),
              {{c * o.spacing_m, 0.0}, {c * o.spacing_m, std::max(height, 1.0)}});
  }
  std::uniform_real_distribution<double> ex(0.0, std::max(width, 1.0));
  std::uniform_real_distribution<double> ny(0.0, std::max(height, 1.0));
  for (int i = 0; i < o.places; ++i) {
    const std::string& type = PlaceTypes()[i % PlaceTypes().size()];
    b.AddPlace(absl::StrFormat("place%05d", i),
               absl::StrCat(type, " ", i), type, ex(rng), ny(rng));
  }
  if (o.tag_probability > 0.0) {
    for (const Panorama& p : b.fixture.panos) {
      std::map<int, std::vector<std::string>> tags;
      for (int oct = 0; oct < 8; ++oct) {
        for (const std::string& tag : TagVocabulary()) {
          if (unit(rng) < o.tag_probability) tags[oct].push_back(tag);
        }
      }
      b.SetViews(p.id, std::move(tags));
    }
  }
  return b.Finish(absl::StrFormat("lattice-%dx%d", o.rows, o.cols));
}

WorldFixture MakeFourWayIntersection(FourWayLayout layout) {
  Builder b{kDefaultAnchor, {}};
  const std::string ns = "North-South Street";
  const std::string ew = "East-West Street";
  b.AddPano("c", 0, 0, ew, "Crossville", "Testland");
  struct Arm {
    const char* name;
    double de, dn;
    const std::string* road;
  };
  const Arm arms[] = {{"n", 0, 1, &ns}, {"e", 1, 0, &ew},
                      {"s", 0, -1, &ns}, {"w", -1, 0, &ew}};
  for (const Arm& arm : arms) {
    for (int step : {1, 2}) {
      const double d = step == 1 ? 8.0 : 18.0;
      b.AddPano(absl::StrCat(arm.name, step), arm.de * d, arm.dn * d,
                *arm.road, "Crossville", "Testland");
    }
  }
  for (const Arm& arm : arms) {
    b.LinkBoth(absl::StrCat(arm.name, 1), absl::StrCat(arm.name, 2));
  }
  std::vector<std::string> center_links;
  switch (layout) {
    case FourWayLayout::kFullyLinked:
      center_links = {"n1", "e1", "s1", "w1"};
      break;
    case FourWayLayout::kEastWestOnly:
      center_links = {"e1", "w1"};
      break;
    case FourWayLayout::kTwoLinks:
      center_links = {"n1", "e1"};
      break;
  }
  for (const std::string& id : center_links) b.LinkBoth("c", id);
  b.AddRoad(ns, {{0, -40}, {0, 40}});
  b.AddRoad(ew, {{-40, 0}, {40, 0}});
  const char* names[] = {"four-way-fully-linked", "four-way-east-west-only",
                         "four-way-two-links"};
  return b.Finish(names[static_cast<int>(layout)]);
}

WorldFixture MakeCrossroads(double cross_at_m) {
  Builder b{kDefaultAnchor, {}};
  std::vector<std::string> main_ids;
  for (int d = 0; d <= 100; d += 10) {
    const std::string id = absl::StrFormat("m%03d", d);
    b.AddPano(id, 0, d, "Main Street", "Crossville", "Testland");
    main_ids.push_back(id);
  }
  b.AddPano("x_int", 0, cross_at_m, "Main Street", "Crossville", "Testland");
  for (size_t i = 1; i < main_ids.size(); ++i) {
    b.LinkBoth(main_ids[i - 1], main_ids[i]);
  }
  const std::string below = absl::StrFormat("m%03d", static_cast<int>(cross_at_m / 10) * 10);
  b.LinkBoth("x_int", below);
  for (int side : {-1, 1}) {
    std::string prev = "x_int";
    for (int d : {10, 20}) {
      const std::string id = absl::StrCat(side < 0 ? "xw" : "xe", d);
      b.AddPano(id, side * d, cross_at_m, "Cross Street", "Crossville",
                "Testland");
      b.LinkBoth(prev, id);
      prev = id;
    }
  }
  b.AddRoad("Main Street", {{0, -10}, {0, 110}});
  b.AddRoad("Cross Street", {{-40, cross_at_m}, {40, cross_at_m}});
  return b.Finish("crossroads");
}

WorldFixture MakeStraightRoad(double length_m, double spacing_m) {
  Builder b{kDefaultAnchor, {}};
  std::string prev;
  for (double d = 0; d <= length_m + 1e-9; d += spacing_m) {
    const std::string id = absl::StrFormat("s%03d", static_cast<int>(d));
    b.AddPano(id, 0, d, "Long Road", "Straightville", "Testland");
    if (!prev.empty()) b.LinkBoth(prev, id);
    prev = id;
  }
  b.AddRoad("Long Road", {{0, -10}, {0, length_m + 10}});
  return b.Finish("straight-road");
}

WorldFixture MakeBridge() {
  Builder b{kDefaultAnchor, {}};
  std::string prev;
  for (int d = 0; d <= 90; d += 10) {
    const std::string id = absl::StrFormat("lo%03d", d);
    b.AddPano(id, 0, d, "Lower Road", "Bridgeton", "Testland");
    if (!prev.empty()) b.LinkBoth(prev, id);
    prev = id;
  }
  prev.clear();
  for (int x : {-25, -15, -5, 5, 15, 25}) {
    const std::string id = absl::StrCat("up", x < 0 ? "w" : "e", std::abs(x));
    b.AddPano(id, x, 45, "Upper Road", "Bridgeton", "Testland");
    if (!prev.empty()) b.LinkBoth(prev, id);
    prev = id;
  }
  b.AddRoad("Lower Road", {{0, -10}, {0, 100}});
  b.AddRoad("Upper Road", {{-40, 45}, {40, 45}});
  return b.Finish("bridge");
}

WorldFixture MakeTeleportDemoWorld() {
  WorldFixture out;
  {
    Builder athens{GeoPoint{37.97152, 23.72573}, {}};
    Panorama& p = athens.AddPano("athens_0", 0, -12, "Dionysiou Areopagitou",
                                 "Athens", "Greece");
    p.address.neighborhood = "Plaka";
    athens.AddPano("athens_1", 10, -12, "Dionysiou Areopagitou", "Athens",
                   "Greece");
    athens.LinkBoth("athens_0", "athens_1");
    athens.AddRoad("Dionysiou Areopagitou", {{-50, -12}, {50, -12}});
    athens.AddPlace("acropolis", "Acropolis of Athens", "historical_landmark",
                    0, 0, "Ancient citadel above the city of Athens.");
    out = athens.Finish("teleport-demo");
  }
  Builder london{GeoPoint{51.50796, -0.09715}, {}};
  const char* kCity = "London";
  const char* kCountry = "England";
  Panorama& start = london.AddPano("bankside_0", 1.5, 4, "Bankside", kCity,
                                   kCountry);
  start.address.street_number = "38";
  start.address.neighborhood = "Southwark";
  london.AddPano("bankside_s", 5, -5, "Bankside", kCity, kCountry);
  london.AddPano("bankside_e", 10.5, 4, "Bankside", kCity, kCountry);
  london.AddPano("bankside_w", -7.5, 4, "Bankside", kCity, kCountry);
  london.AddPano("rose_alley_nw", -5.5, 11, "Rose Alley", kCity, kCountry);
  london.LinkBoth("bankside_0", "bankside_e");
  london.LinkBoth("bankside_0", "bankside_w");
  london.AddRoad("Bankside", {{-60, 4}, {60, 4}});
  london.AddRoad("Rose Alley", {{1.5, 4}, {-18.5, 24}});
  london.AddPlace("bankside38", "38 Bankside", "street_address", 0, 0);
  london.AddPlace("globe", "Shakespeare's Globe", "performing_arts_theater", 1.5,
                  -22, "Reconstruction of the Elizabethan playhouse.");
  london.AddPlace("wanamaker", "Sam Wanamaker Plaque", "historical_landmark",
                  31.5, -6);
  london.AddPlace("ingresso", "Ingresso", "event_venue", 43.5, -16);
  london.AddPlace("tate_garden", "Tate Community Garden", "garden", -43.5, -16);
  WorldFixture london_fixture = london.Finish("teleport-demo");
  for (auto& p : london_fixture.panos) out.panos.push_back(std::move(p));
  for (auto& p : london_fixture.places) out.places.push_back(std::move(p));
  for (auto& r : london_fixture.roads) out.roads.push_back(std::move(r));
  for (auto& [id, v] : london_fixture.imagery) out.imagery[id] = std::move(v);
  return out;
}

WorldFixture MakePoiScenarioWorld() {
  WorldFixture out;
  out.meta.name = "poi-scenarios";
  auto merge = [&out](WorldFixture f) {
    for (auto& p : f.panos) out.panos.push_back(std::move(p));
    for (auto& p : f.places) out.places.push_back(std::move(p));
    for (auto& r : f.roads) out.roads.push_back(std::move(r));
    for (auto& [id, v] : f.imagery) out.imagery[id] = std::move(v);
  };
  {
    Builder b{GeoPoint{40.0000, -83.0150}, {}};
    for (int d : {-10, 0, 10}) {
      b.AddPano(absl::StrCat("bus_", d < 0 ? "w" : (d > 0 ? "e" : "c")), d,
                0, "Campus Drive", "Columbus", "United States");
    }
    b.LinkBoth("bus_w", "bus_c");
    b.LinkBoth("bus_c", "bus_e");
    b.AddRoad("Campus Drive", {{-60, 0}, {60, 0}});
    b.SetViews("bus_c", {{0, {"bus_shelter", "bench", "sidewalk"}},
                         {1, {"garbage_can", "sidewalk"}},
                         {2, {"crosswalk", "traffic_light"}},
                         {4, {"tree", "sidewalk"}},
                         {6, {"curb_ramp", "sidewalk"}}});
    b.AddPlace("bus_stop", "Campus Bus Stop", "bus_station", 0, 6);
    b.AddPlace("library", "University Library", "library", 0, -30,
               "Main research library of the university.");
    b.AddPlace("union", "Student Union", "university", -35, 5);
    merge(b.Finish("bus"));
  }
  {
    Builder b{GeoPoint{40.0100, -83.0150}, {}};
    for (int d : {-10, 0, 10}) {
      b.AddPano(absl::StrCat("play_", d < 0 ? "s" : (d > 0 ? "n" : "c")), 0,
                d, "Maple Avenue", "Columbus", "United States");
    }
    b.LinkBoth("play_s", "play_c");
    b.LinkBoth("play_c", "play_n");
    b.AddRoad("Maple Avenue", {{0, -60}, {0, 60}});
    b.SetViews("play_c", {{1, {"slide", "climbing_structure", "wood_chips"}},
                          {2, {"swing", "grass"}},
                          {3, {"bench", "grass"}},
                          {0, {"sidewalk", "tree"}},
                          {6, {"sidewalk", "parked_car"}}});
    b.AddPlace("playground", "Maple Park Playground", "playground", 14, 0,
               "Neighborhood playground with swings and slides.");
    merge(b.Finish("playground"));
  }
  {
    Builder b{GeoPoint{40.0200, -83.0150}, {}};
    for (int d : {-10, 0, 10}) {
      b.AddPano(absl::StrCat("rest_", d < 0 ? "w" : (d > 0 ? "e" : "c")), d,
                0, "Elm Street", "Columbus", "United States");
    }
    b.LinkBoth("rest_w", "rest_c");
    b.LinkBoth("rest_c", "rest_e");
    b.AddRoad("Elm Street", {{-60, 0}, {60, 0}});
    b.SetViews("rest_c", {{0, {"mural", "awning", "sidewalk"}},
                          {1, {"bike_rack", "sidewalk"}},
                          {6, {"parking_lot"}},
                          {4, {"fire_hydrant", "pole"}}});
    b.AddPlace("casa_verde", "Casa Verde Mexican Restaurant",
               "mexican_restaurant", 0, 12,
               "Two-story brick building with a blue awning and a mural.");
    b.AddPlace("elm_parking", "Elm Street Parking", "parking", -30, 8);
    merge(b.Finish("restaurant"));
  }
  return out;
}

const std::vector<std::string>& BuiltinWorldNames() {
  static const std::vector<std::string> kNames = {
      "teleport-demo", "poi-scenarios",      "crossroads",
      "straight-road", "bridge",             "four-way-full",
      "four-way-east-west", "four-way-two-links", "lattice-50"};
  return kNames;
}

std::optional<WorldFixture> BuiltinWorld(const std::string& name) {
  std::optional<WorldFixture> f;
  if (name == "teleport-demo") {
    f = MakeTeleportDemoWorld();
  } else if (name == "poi-scenarios") {
    f = MakePoiScenarioWorld();
  } else if (name == "crossroads") {
    f = MakeCrossroads();
  } else if (name == "straight-road") {
    f = MakeStraightRoad();
  } else if (name == "bridge") {
    f = MakeBridge();
  } else if (name == "four-way-full") {
    f = MakeFourWayIntersection(FourWayLayout::kFullyLinked);
  } else if (name == "four-way-east-west") {
    f = MakeFourWayIntersection(FourWayLayout::kEastWestOnly);
  } else if (name == "four-way-two-links") {
    f = MakeFourWayIntersection(FourWayLayout::kTwoLinks);
  } else if (name == "lattice-50") {
    LatticeCityOptions o;
    o.places = 120;
    o.tag_probability = 0.15;
    f = MakeLatticeCity(o);
  }
  if (f.has_value()) f->meta.name = name;
  return f;
}

}  // namespace streetnav::synthetic
