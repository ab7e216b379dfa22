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


#include "streetnav/world.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "streetnav/synthetic.h"

namespace streetnav {
namespace {

std::shared_ptr<const World> MustCreate(WorldFixture f) {
  auto w = World::Create(std::move(f));
  EXPECT_TRUE(w.ok()) << w.status();
  return *w;
}

TEST(WorldTest, RejectsDanglingLink) {
  WorldFixture f = synthetic::MakeStraightRoad(30, 10);
  f.panos[0].links.push_back(PanoLink{"ghost", Heading(0), ""});
  auto w = World::Create(f);
  ASSERT_FALSE(w.ok());
  EXPECT_EQ(w.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_NE(w.status().message().find("ghost"), std::string::npos);
}

TEST(WorldTest, RejectsDuplicateIdsAndBadCoordinates) {
  WorldFixture f = synthetic::MakeStraightRoad(30, 10);
  f.panos.push_back(f.panos[0]);
  EXPECT_FALSE(World::Create(f).ok());
  f = synthetic::MakeStraightRoad(30, 10);
  f.panos[1].location.lat = 95;
  EXPECT_FALSE(World::Create(f).ok());
  f = synthetic::MakeStraightRoad(30, 10);
  f.roads[0].geometry.resize(1);
  EXPECT_FALSE(World::Create(f).ok());
}

TEST(WorldTest, MissingImageryIsFilled) {
  WorldFixture f = synthetic::MakeStraightRoad(30, 10);
  f.imagery.clear();
  auto w = MustCreate(f);
  auto view = w->GetView("s010", 2);
  ASSERT_TRUE(view.ok());
  EXPECT_EQ(view->image_ref, "s010/90");
  EXPECT_TRUE(view->tags.empty());
}

// Brute-force oracle for the grid query.
std::vector<std::string> GridOracle(const WorldFixture& f, GeoPoint c,
                                    double half) {
  const TangentPlane plane(c);
  std::vector<std::string> ids;
  for (const Panorama& p : f.panos) {
    auto xy = plane.Project(p.location);
    if (std::abs(xy.x) <= half + 1e-6 && std::abs(xy.y) <= half + 1e-6) {
      ids.push_back(p.id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

TEST(WorldTest, PanosInGridMatchesOracle) {
  synthetic::LatticeCityOptions o;
  o.rows = 20;
  o.cols = 20;
  o.road_every = 3;
  const WorldFixture f = synthetic::MakeLatticeCity(o);
  auto w = MustCreate(f);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> m(-20, 210), half(1, 40);
  for (int i = 0; i < 300; ++i) {
    const GeoPoint c = OffsetMeters(o.anchor, m(rng), m(rng));
    const double h = half(rng);
    auto hits = w->PanosInGrid(c, h);
    ASSERT_TRUE(hits.ok());
    std::vector<std::string> ids;
    for (const PanoHit& hit : *hits) ids.push_back(hit.pano.id);
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(ids, GridOracle(f, c, h));
  }
}

TEST(WorldTest, PlacesNearIsSortedAndInclusive) {
  synthetic::LatticeCityOptions o;
  o.rows = 10;
  o.cols = 10;
  o.places = 200;
  const WorldFixture f = synthetic::MakeLatticeCity(o);
  auto w = MustCreate(f);
  const GeoPoint c = OffsetMeters(o.anchor, 45, 45);
  auto hits = w->PlacesNear(c, 30);
  ASSERT_TRUE(hits.ok());
  size_t oracle = 0;
  for (const Place& p : f.places) {
    if (HaversineDistance(c, p.location) <= 30 + 1e-6) ++oracle;
  }
  EXPECT_EQ(hits->size(), oracle);
  EXPECT_TRUE(std::is_sorted(
      hits->begin(), hits->end(),
      [](const PlaceHit& a, const PlaceHit& b) {
        return a.distance_m < b.distance_m;
      }));
}

TEST(WorldTest, SearchRanksExactThenPrefixThenSubstring) {
  auto w = MustCreate(synthetic::MakeTeleportDemoWorld());
  auto r = w->SearchText("  38 bankside ");
  ASSERT_TRUE(r.ok());
  ASSERT_FALSE(r->empty());
  EXPECT_EQ((*r)[0].display_name, "38 Bankside");
  EXPECT_EQ((*r)[0].formatted_address, "38 Bankside, London");
  auto g = w->SearchText("globe");
  ASSERT_EQ(g->size(), 1u);
  EXPECT_EQ((*g)[0].place_id, "globe");
  EXPECT_TRUE(w->SearchText("")->empty());
  EXPECT_TRUE(w->SearchText("zzz")->empty());
}

TEST(WorldTest, NearestPanoTieBreaksById) {
  auto w = MustCreate(synthetic::MakeFourWayIntersection(
      synthetic::FourWayLayout::kFullyLinked));
  const Panorama* c = w->FindPano("c");
  ASSERT_NE(c, nullptr);
  auto n = w->NearestPano(OffsetMeters(c->location, 0.1, 0));
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(n->pano.id, "c");
  EXPECT_EQ(w->GetPanorama("nope").status().code(),
            absl::StatusCode::kNotFound);
}

TEST(WorldTest, RoadsInGridFindsCrossingSegments) {
  auto w = MustCreate(synthetic::MakeBridge());
  const Panorama* lo = w->FindPano("lo040");
  auto roads = w->RoadsInGrid(lo->location, 10);
  ASSERT_TRUE(roads.ok());
  EXPECT_EQ(roads->size(), 2u);
  roads = w->RoadsInGrid(w->FindPano("lo000")->location, 10);
  ASSERT_EQ(roads->size(), 1u);
  EXPECT_EQ((*roads)[0].name, "Lower Road");
}

TEST(SyntheticTest, GeneratorsAreValidAndDeterministic) {
  synthetic::LatticeCityOptions o;
  o.rows = 8;
  o.cols = 8;
  o.link_keep_probability = 0.5;
  o.places = 20;
  o.tag_probability = 0.1;
  EXPECT_EQ(synthetic::MakeLatticeCity(o), synthetic::MakeLatticeCity(o));
  for (WorldFixture f :
       {synthetic::MakeLatticeCity(o),
        synthetic::MakeFourWayIntersection(
            synthetic::FourWayLayout::kTwoLinks),
        synthetic::MakeCrossroads(), synthetic::MakeStraightRoad(),
        synthetic::MakeBridge(), synthetic::MakeTeleportDemoWorld(),
        synthetic::MakePoiScenarioWorld()}) {
    EXPECT_TRUE(ValidateFixture(f).ok()) << f.meta.name << ": "
                                         << ValidateFixture(f);
  }
}

TEST(SyntheticTest, LinkHeadingsPointAtTargets) {
  const WorldFixture f = synthetic::MakeCrossroads();
  auto w = MustCreate(f);
  for (const Panorama& p : f.panos) {
    for (const PanoLink& l : p.links) {
      const Panorama* t = w->FindPano(l.target_id);
      ASSERT_NE(t, nullptr);
      EXPECT_NEAR(
          RelativeHeading(*InitialBearing(p.location, t->location), l.heading),
          0.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace streetnav
