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

#include "absl/strings/match.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "streetnav/synthetic.h"
#include "streetnav/world.h"
#include "test_support.h"

namespace streetnav {
namespace {

using ::streetnav::testing::OracleBearing;
using ::streetnav::testing::OracleBucket;
using ::streetnav::testing::OracleDistance;

SessionState At(const std::string& pano, double heading) {
  SessionState st;
  st.current_pano_id = pano;
  st.heading = Heading(heading);
  return st;
}

TEST(GeoContextTest, NoPlacesStillHasAddress) {
  auto world = *World::Create(synthetic::MakeStraightRoad());
  auto ctx = AssembleGeoContext(At("s050", 90), world->services(), {});
  ASSERT_TRUE(ctx.ok()) << ctx.status();
  EXPECT_TRUE(ctx->nearby_places.empty());
  EXPECT_EQ(ctx->closest_address, "Long Road");
  EXPECT_EQ(ctx->compass, "East");
}

TEST(GeoContextTest, DefaultRadiusIsFiftyMeters) {
  EXPECT_DOUBLE_EQ(NavConfig{}.nearby_radius_m, 50.0);
}

TEST(GeoContextTest, EntriesAgreeWithIndependentOracle) {
  auto world = *World::Create(synthetic::MakeTeleportDemoWorld());
  const NavConfig cfg;
  for (const Panorama& pano : world->fixture().panos) {
    for (int o = 0; o < 8; ++o) {
      const double h = o * 45.0;
      auto ctx = AssembleGeoContext(At(pano.id, h), world->services(), cfg);
      ASSERT_TRUE(ctx.ok());
      size_t expected = 0;
      for (const Place& p : world->fixture().places) {
        if (OracleDistance(pano.location, p.location) <= 50.0) ++expected;
      }
      EXPECT_EQ(ctx->nearby_places.size(), expected) << pano.id;
      double last = -1.0;
      for (const GeoContextPlace& e : ctx->nearby_places) {
        const Place* place = world->FindPlace(e.id);
        ASSERT_NE(place, nullptr);
        EXPECT_NEAR(e.distance_m, OracleDistance(pano.location, place->location),
                    1e-3);
        EXPECT_LE(e.distance_m, 50.0 + 1e-6);
        EXPECT_GE(e.distance_m, last);
        last = e.distance_m;
        const double bearing = OracleBearing(pano.location, place->location);
        double off = std::fmod(bearing - h + 720.0, 360.0);
        if (off > 180.0) off -= 360.0;
        EXPECT_NEAR(e.heading_offset_deg, off, 1e-6);
        EXPECT_EQ(static_cast<int>(e.relative_position), OracleBucket(bearing, h))
            << pano.id << " " << e.id;
      }
    }
  }
}

TEST(GeoContextTest, SelectedPlaceAndLocality) {
  auto world = *World::Create(synthetic::MakeTeleportDemoWorld());
  SessionState st = At("bankside_0", 180);
  st.selected_place = "bankside38";
  auto ctx = AssembleGeoContext(st, world->services(), {});
  ASSERT_TRUE(ctx.ok());
  EXPECT_EQ(ctx->selected_place, "38 Bankside");
  EXPECT_EQ(ctx->closest_address, "38 Bankside");
  EXPECT_EQ(ctx->neighborhood, "Southwark");
  EXPECT_EQ(ctx->city, "London");
  EXPECT_EQ(ctx->country, "England");
}

TEST(GeoContextTest, JsonKeepsFieldOrder) {
  auto world = *World::Create(synthetic::MakeTeleportDemoWorld());
  auto ctx = AssembleGeoContext(At("bankside_0", 180), world->services(), {});
  ASSERT_TRUE(ctx.ok());
  const std::string json = GeoContextJson(*ctx);
  auto j = nlohmann::ordered_json::parse(json);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "selected_place", "closest_address", "heading", "compass",
                      "neighborhood", "city", "state", "country",
                      "nearby_places"}));
  EXPECT_EQ(j["nearby_places"][0]["name"], "38 Bankside");
  EXPECT_EQ(j["nearby_places"][1]["name"], "Shakespeare's Globe");
  EXPECT_EQ(j["nearby_places"][0]["relative_position"], "InFront");
  EXPECT_EQ(json, GeoContextJson(*ctx));
}

TEST(UserProfileTest, DefaultClause) {
  EXPECT_EQ(UserProfile{}.PromptClause(),
            "Assume the user is blind and may use a white cane or a guide dog "
            "for mobility.");
  EXPECT_EQ(UserProfile{""}.PromptClause(), kDefaultProfileClause);
  EXPECT_EQ(UserProfile{"I use a guide dog."}.PromptClause(),
            "I use a guide dog.");
}

}  // namespace
}  // namespace streetnav
