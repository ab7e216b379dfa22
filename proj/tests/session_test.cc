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


#include "streetnav/session.h"

#include <random>

#include "gtest/gtest.h"
#include "streetnav/synthetic.h"
#include "streetnav/world.h"

namespace streetnav {
void PrintTo(const Position& p, std::ostream* os) {
  *os << p.pano_id << "@" << p.heading.degrees();
}

namespace {

struct Harness {
  std::shared_ptr<const World> world;
  ManualClock clock{1000, 5};
  std::shared_ptr<MemoryLogStorage> storage =
      std::make_shared<MemoryLogStorage>();
  EventLog log{storage, 10};
  std::unique_ptr<Session> session;

  Harness(WorldFixture f, const std::string& start, Heading h,
          NavConfig cfg = {}) {
    world = *World::Create(std::move(f));
    auto s = Session::Start(world->services(), cfg, start, h, &clock, &log);
    EXPECT_TRUE(s.ok()) << s.status();
    session = *std::move(s);
  }
  const std::string& here() const { return session->state().current_pano_id; }
};

TEST(SessionTest, PanCyclesThroughOctants) {
  Harness h(synthetic::MakeStraightRoad(), "s000", Heading(0));
  EXPECT_EQ(h.session->Pan(PanDirection::kLeft).to, Heading(315));
  for (int i = 0; i < 8; ++i) h.session->Pan(PanDirection::kRight);
  EXPECT_EQ(h.session->state().heading, Heading(315));
  // start + 9 pans.
  EXPECT_EQ(h.log.events().size(), 10u);
}

TEST(SessionTest, StartSnapsHeading) {
  Harness h(synthetic::MakeStraightRoad(), "s000", Heading(100));
  EXPECT_EQ(h.session->state().heading, Heading(90));
  EXPECT_EQ(h.session->VisitInfo().count, 1);
}

TEST(SessionTest, ForwardThenBackwardIsIdentity) {
  Harness h(synthetic::MakeStraightRoad(), "s050", Heading(0));
  auto f = h.session->Step(StepDirection::kForward);
  ASSERT_TRUE(f.ok() && f->moved);
  EXPECT_EQ(h.here(), "s060");
  EXPECT_NEAR(f->distance_m, 10.0, 1e-6);
  auto b = h.session->Step(StepDirection::kBackward);
  ASSERT_TRUE(b.ok() && b->moved);
  EXPECT_EQ(h.session->state().position(), (Position{"s050", Heading(0)}));
  EXPECT_EQ(b->prior_visits, 1);
}

TEST(SessionTest, DeadEndIsNoMove) {
  Harness h(synthetic::MakeStraightRoad(), "s150", Heading(0));
  auto r = h.session->Step(StepDirection::kForward);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->moved);
  EXPECT_EQ(h.here(), "s150");
  auto j = h.session->Jump();
  ASSERT_TRUE(j.ok());
  EXPECT_FALSE(j->moved);
  EXPECT_TRUE(h.session->state().undo_stack.empty());
}

TEST(SessionTest, JumpToIntersectionAndMaxDistance) {
  Harness h(synthetic::MakeCrossroads(), "m000", Heading(0));
  auto j = h.session->Jump();
  ASSERT_TRUE(j.ok() && j->moved);
  EXPECT_EQ(h.here(), "x_int");
  EXPECT_EQ(j->jump_kind, JumpKind::kToIntersection);
  ASSERT_TRUE(j->intersection.has_value());

  Harness s(synthetic::MakeStraightRoad(), "s000", Heading(0));
  auto m = s.session->Jump();
  ASSERT_TRUE(m.ok() && m->moved);
  EXPECT_EQ(s.here(), "s070");
  EXPECT_EQ(m->jump_kind, JumpKind::kMaxDistance);
  EXPECT_LE(m->distance_m, 70.0 + 1e-6);
}

TEST(SessionTest, GoBackToggles) {
  Harness h(synthetic::MakeStraightRoad(), "s000", Heading(0));
  auto nothing = h.session->GoBack();
  ASSERT_TRUE(nothing.ok());
  EXPECT_FALSE(nothing->moved);

  h.session->Step(StepDirection::kForward).IgnoreError();
  h.session->Pan(PanDirection::kRight);
  const Position a{"s000", Heading(0)};
  const Position b{"s010", Heading(45)};
  EXPECT_EQ(h.session->state().position(), b);
  for (int i = 0; i < 4; ++i) {
    auto r = h.session->GoBack();
    ASSERT_TRUE(r.ok() && r->moved);
    EXPECT_EQ(h.session->state().position(), i % 2 == 0 ? a : b);
    EXPECT_LE(h.session->state().undo_stack.size(), 1u);
  }
}

TEST(SessionTest, UndoDepthIsConfigurable) {
  NavConfig cfg;
  cfg.undo_depth = 3;
  Harness h(synthetic::MakeStraightRoad(), "s000", Heading(0), cfg);
  for (int i = 0; i < 5; ++i) {
    h.session->Step(StepDirection::kForward).IgnoreError();
  }
  EXPECT_EQ(h.session->state().undo_stack.size(), 3u);
  h.session->GoBack().IgnoreError();
  EXPECT_EQ(h.here(), "s040");
}

TEST(SessionTest, VisitCounts) {
  Harness h(synthetic::MakeStraightRoad(), "s000", Heading(0));
  h.session->Step(StepDirection::kForward).IgnoreError();
  h.session->Step(StepDirection::kForward).IgnoreError();
  h.session->Step(StepDirection::kBackward).IgnoreError();
  h.session->Step(StepDirection::kBackward).IgnoreError();
  const VisitRecord v = h.session->VisitInfo();
  EXPECT_EQ(v.count, 2);
  ASSERT_TRUE(v.previous_visit_ms.has_value());
  EXPECT_LT(*v.previous_visit_ms, v.last_visit_ms);
}

TEST(SessionTest, TeleportAcrossEurope) {
  Harness h(synthetic::MakeTeleportDemoWorld(), "athens_0", Heading(0));
  auto first = h.session->Teleport("Acropolis of Athens");
  ASSERT_TRUE(first.ok()) << first.status();
  EXPECT_EQ(h.session->state().selected_place, "acropolis");
  auto t = h.session->Teleport("38 Bankside");
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(h.here(), "bankside_0");
  EXPECT_EQ(h.session->state().heading, Heading(180));
  EXPECT_EQ(t->origin_name, "Acropolis of Athens");
  EXPECT_NEAR(t->distance_m / 1000.0, 2390.71, 0.01);
  EXPECT_EQ(t->to_address.city, "London");
  EXPECT_EQ(t->from_address.city, "Athens");
  EXPECT_EQ(h.session->state().selected_place, "bankside38");

  auto missing = h.session->Teleport("Atlantis");
  EXPECT_EQ(missing.status().code(), absl::StatusCode::kNotFound);
}

TEST(SessionTest, TeleportWithoutNearbyImagery) {
  WorldFixture f = synthetic::MakeStraightRoad();
  f.places.push_back(Place{"far", "Far Tower", "tower",
                           OffsetMeters(synthetic::kDefaultAnchor, 0, 1200),
                           std::nullopt});
  Harness h(std::move(f), "s000", Heading(0));
  auto t = h.session->Teleport("Far Tower");
  EXPECT_EQ(t.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(h.here(), "s000");
}

TEST(SessionTest, TeleportHeadingSnapsToDestination) {
  // Destination bearings swept in 0.5 degree steps; the oracle snaps with
  // floor((b + 22.5) / 45) mod 8.
  for (double b = 0; b < 360; b += 0.5) {
    WorldFixture f = synthetic::MakeStraightRoad(30, 30);
    const GeoPoint target =
        DestinationPoint(f.panos[0].location, Heading(b), 6.0);
    f.places.push_back(Place{"t", "Target", "x", target, std::nullopt});
    Harness h(std::move(f), "s030", Heading(0));
    ASSERT_TRUE(h.session->Teleport("Target").ok());
    ASSERT_EQ(h.here(), "s000");
    const double actual = InitialBearing(h.world->FindPano("s000")->location,
                                         target)->degrees();
    const int oracle = static_cast<int>(std::floor((actual + 22.5) / 45)) % 8;
    EXPECT_EQ(h.session->state().heading, Heading::FromOctant(oracle)) << b;
  }
}

TEST(SessionTest, TimestampsAreMonotone) {
  Harness h(synthetic::MakeStraightRoad(), "s000", Heading(0));
  h.clock.Set(500);  // clock jumps backwards
  h.session->Pan(PanDirection::kLeft);
  const auto events = h.log.events();
  for (size_t i = 1; i < events.size(); ++i) {
    EXPECT_GE(events[i].ts_ms, events[i - 1].ts_ms);
  }
}

TEST(SessionTest, RandomWalkInvariantsAndReplay) {
  synthetic::LatticeCityOptions o;
  o.rows = 15;
  o.cols = 15;
  o.road_every = 2;
  o.link_keep_probability = 0.6;
  Harness h(synthetic::MakeLatticeCity(o), synthetic::LatticePanoId(0, 0),
            Heading(0));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    switch (rng() % 6) {
      case 0: h.session->Pan(PanDirection::kLeft); break;
      case 1: h.session->Pan(PanDirection::kRight); break;
      case 2: h.session->Step(StepDirection::kForward).IgnoreError(); break;
      case 3: h.session->Step(StepDirection::kBackward).IgnoreError(); break;
      case 4: h.session->Jump().IgnoreError(); break;
      case 5: h.session->GoBack().IgnoreError(); break;
    }
    ASSERT_TRUE(h.session->state().heading.IsOctant());
    ASSERT_NE(h.world->FindPano(h.here()), nullptr);
  }
  auto parsed = ParseEventLog(h.log.Export());
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  auto replayed = ReplayEvents(*parsed, 1);
  ASSERT_TRUE(replayed.ok()) << replayed.status();
  EXPECT_EQ(*replayed, h.session->state());
}

}  // namespace
}  // namespace streetnav
