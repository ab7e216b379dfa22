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


#include "streetnav/geo.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

namespace streetnav {
namespace {

// Independent oracle: spherical law of cosines, accurate away from tiny
// separations.
double CosineLawDistance(GeoPoint a, GeoPoint b) {
  const double k = std::numbers::pi / 180.0;
  const double c = std::sin(a.lat * k) * std::sin(b.lat * k) +
                   std::cos(a.lat * k) * std::cos(b.lat * k) *
                       std::cos((b.lng - a.lng) * k);
  return kEarthRadiusMeters * std::acos(std::clamp(c, -1.0, 1.0));
}

TEST(GeoTest, OneDegreeOfLatitude) {
  // R * pi / 180 computed with the cosine-law oracle, frozen.
  EXPECT_NEAR(HaversineDistance({0, 0}, {1, 0}), 111195.08, 0.01);
  EXPECT_NEAR(CosineLawDistance({0, 0}, {1, 0}), 111195.08, 0.01);
}

TEST(GeoTest, AthensToLondon) {
  const GeoPoint athens{37.97152, 23.72573};
  const GeoPoint london{51.50796, -0.09715};
  const double d = HaversineDistance(athens, london);
  EXPECT_NEAR(d / 1000.0, 2390.71, 0.01);
  EXPECT_LT(std::abs(d / 1000.0 - 2393.0) / 2393.0, 0.01);
}

TEST(GeoTest, HaversineMatchesCosineLaw) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lat(-80, 80), lng(-180, 180);
  for (int i = 0; i < 2000; ++i) {
    GeoPoint a{lat(rng), lng(rng)}, b{lat(rng), lng(rng)};
    const double h = HaversineDistance(a, b);
    if (h < 10000) continue;
    EXPECT_NEAR(h, CosineLawDistance(a, b), 1e-3);
    EXPECT_NEAR(h, HaversineDistance(b, a), 1e-6);
  }
}

TEST(GeoTest, CreateValidates) {
  EXPECT_FALSE(GeoPoint::Create(91, 0).ok());
  EXPECT_FALSE(GeoPoint::Create(NAN, 0).ok());
  auto p = GeoPoint::Create(10, 190);
  ASSERT_TRUE(p.ok());
  EXPECT_DOUBLE_EQ(p->lng, -170);
  EXPECT_DOUBLE_EQ(NormalizeLongitude(-180), 180);
}

TEST(GeoTest, BearingCardinals) {
  const GeoPoint o{10, 10};
  EXPECT_NEAR(InitialBearing(o, {11, 10})->degrees(), 0.0, 1e-9);
  EXPECT_NEAR(InitialBearing(o, {9, 10})->degrees(), 180.0, 1e-9);
  EXPECT_NEAR(InitialBearing(o, {10, 10.001})->degrees(), 90.0, 1e-3);
  EXPECT_NEAR(InitialBearing(o, {10, 9.999})->degrees(), 270.0, 1e-3);
  EXPECT_FALSE(InitialBearing(o, o).ok());
}

TEST(GeoTest, DestinationRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lat(-70, 70), lng(-180, 180),
      brg(0, 360), dist(1, 5000);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint o{lat(rng), lng(rng)};
    const Heading h(brg(rng));
    const double d = dist(rng);
    const GeoPoint p = DestinationPoint(o, h, d);
    EXPECT_NEAR(HaversineDistance(o, p), d, 1e-6);
    EXPECT_NEAR(RelativeHeading(*InitialBearing(o, p), h), 0.0, 1e-6);
  }
}

TEST(GeoTest, OffsetMetersInvertsProjection) {
  const GeoPoint o{51.5, -0.1};
  const TangentPlane plane(o);
  const auto xy = plane.Project(OffsetMeters(o, 12.5, -7.25));
  EXPECT_NEAR(xy.x, 12.5, 1e-9);
  EXPECT_NEAR(xy.y, -7.25, 1e-9);
}

TEST(HeadingTest, NormalizesAndSnaps) {
  EXPECT_DOUBLE_EQ(Heading(-45).degrees(), 315);
  EXPECT_DOUBLE_EQ(Heading(720).degrees(), 0);
  EXPECT_EQ(Heading(22.4).NearestOctant(), 0);
  EXPECT_EQ(Heading(22.5).NearestOctant(), 1);
  EXPECT_EQ(Heading(337.5).NearestOctant(), 0);
  EXPECT_EQ(Heading(337.4).NearestOctant(), 7);
  EXPECT_TRUE(Heading(135).IsOctant());
  EXPECT_FALSE(Heading(136).IsOctant());
  for (int o = 0; o < 8; ++o) {
    EXPECT_EQ(Heading::FromOctant(o).NearestOctant(), o);
    EXPECT_EQ(Heading::FromOctant(o).Rotated(45).NearestOctant(), (o + 1) % 8);
  }
  EXPECT_EQ(CompassName(Heading(90)), "East");
  EXPECT_EQ(CompassName(Heading(315)), "Northwest");
}

TEST(HeadingTest, RelativeHeadingRange) {
  EXPECT_DOUBLE_EQ(RelativeHeading(Heading(0), Heading(180)), 180);
  EXPECT_DOUBLE_EQ(RelativeHeading(Heading(10), Heading(350)), 20);
  EXPECT_DOUBLE_EQ(RelativeHeading(Heading(350), Heading(10)), -20);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0, 360);
  for (int i = 0; i < 5000; ++i) {
    const double r = RelativeHeading(Heading(d(rng)), Heading(d(rng)));
    EXPECT_GT(r, -180.0);
    EXPECT_LE(r, 180.0);
  }
}

TEST(HeadingTest, RelativePositionBuckets) {
  EXPECT_EQ(RelativePositionOf(0), RelativePosition::kInFront);
  EXPECT_EQ(RelativePositionOf(44.9), RelativePosition::kInFront);
  EXPECT_EQ(RelativePositionOf(-44.9), RelativePosition::kInFront);
  EXPECT_EQ(RelativePositionOf(45), RelativePosition::kToYourRight);
  EXPECT_EQ(RelativePositionOf(134.9), RelativePosition::kToYourRight);
  EXPECT_EQ(RelativePositionOf(135), RelativePosition::kBehind);
  EXPECT_EQ(RelativePositionOf(-135), RelativePosition::kBehind);
  EXPECT_EQ(RelativePositionOf(180), RelativePosition::kBehind);
  EXPECT_EQ(RelativePositionOf(-45), RelativePosition::kToYourLeft);
  EXPECT_EQ(RelativePositionOf(-134.9), RelativePosition::kToYourLeft);
}

TEST(TangentPlaneTest, SquareAndSegments) {
  const GeoPoint c{40, -80};
  const TangentPlane plane(c);
  EXPECT_TRUE(plane.InSquare(OffsetMeters(c, 10, -10), 10));
  EXPECT_FALSE(plane.InSquare(OffsetMeters(c, 10.01, 0), 10));
  // Segment crossing the square without endpoints inside.
  EXPECT_TRUE(plane.SegmentTouchesSquare(OffsetMeters(c, -50, 1),
                                         OffsetMeters(c, 50, 1), 10));
  EXPECT_FALSE(plane.SegmentTouchesSquare(OffsetMeters(c, -50, 11),
                                          OffsetMeters(c, 50, 11), 10));
  // Diagonal that clips a corner.
  EXPECT_TRUE(plane.SegmentTouchesSquare(OffsetMeters(c, 0, 19),
                                         OffsetMeters(c, 19, 0), 10));
  EXPECT_FALSE(plane.SegmentTouchesSquare(OffsetMeters(c, 0, 21),
                                          OffsetMeters(c, 21, 0), 10));
}

}  // namespace
}  // namespace streetnav
