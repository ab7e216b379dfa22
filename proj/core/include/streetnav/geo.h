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


#ifndef STREETNAV_GEO_H_
#define STREETNAV_GEO_H_

#include <array>
#include <string>

#include "absl/status/statusor.h"

namespace streetnav {

// IUGG mean Earth radius. All distances use a spherical Earth.
inline constexpr double kEarthRadiusMeters = 6371008.8;

// Slack applied to every inclusive distance / angle threshold so that points
// constructed exactly on a boundary are not lost to floating-point noise.
inline constexpr double kDistanceEpsilonMeters = 1e-6;
inline constexpr double kAngleEpsilonDegrees = 1e-6;

// Normalizes a longitude into (-180, 180].
double NormalizeLongitude(double lng);

struct GeoPoint {
  double lat = 0.0;  // degrees, [-90, 90]
  double lng = 0.0;  // degrees, (-180, 180]

  // Validates latitude and normalizes longitude.
  static absl::StatusOr<GeoPoint> Create(double lat, double lng);

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

// A compass heading in [0, 360).
class Heading {
 public:
  constexpr Heading() = default;
  explicit Heading(double degrees);

  // One of the eight 45-degree compass octants; index 0 is North, clockwise.
  static Heading FromOctant(int index);

  double degrees() const { return degrees_; }

  // Nearest octant index in [0, 8); exact half-way values go clockwise.
  int NearestOctant() const;
  Heading SnappedToOctant() const { return FromOctant(NearestOctant()); }
  bool IsOctant() const;

  Heading Rotated(double delta_degrees) const {
    return Heading(degrees_ + delta_degrees);
  }

  friend bool operator==(const Heading&, const Heading&) = default;

 private:
  double degrees_ = 0.0;
};

enum class RelativePosition { kInFront, kToYourRight, kBehind, kToYourLeft };

// Great-circle distance in meters.
double HaversineDistance(const GeoPoint& a, const GeoPoint& b);

// Forward azimuth at `from`. Fails with InvalidArgument for coincident points.
absl::StatusOr<Heading> InitialBearing(const GeoPoint& from,
                                       const GeoPoint& to);

// Point reached by travelling `distance_m` along `bearing` from `origin`.
GeoPoint DestinationPoint(const GeoPoint& origin, Heading bearing,
                          double distance_m);

// Inverse of TangentPlane::Project: the point `east_m` / `north_m` meters
// from `origin` in its local equirectangular frame.
GeoPoint OffsetMeters(const GeoPoint& origin, double east_m, double north_m);

// "North", "Northeast", ... for the nearest octant.
const std::string& CompassName(Heading h);
const std::array<std::string, 8>& CompassNames();

// Signed shortest difference target - user in (-180, 180], clockwise
// positive.
double RelativeHeading(Heading target_bearing, Heading user_heading);

// Buckets: front |o| < 45; right 45 <= o < 135; behind |o| >= 135;
// left -135 < o <= -45.
RelativePosition RelativePositionOf(double offset_degrees);

const char* RelativePositionName(RelativePosition p);

// Local equirectangular projection centered at a reference point. x grows
// east, y grows north, both in meters.
class TangentPlane {
 public:
  explicit TangentPlane(const GeoPoint& center);

  struct Xy {
    double x = 0.0;
    double y = 0.0;
  };

  Xy Project(const GeoPoint& p) const;

  // True when `p` lies in the axis-aligned square of half side `half_extent`.
  bool InSquare(const GeoPoint& p, double half_extent) const;

  // True when the segment a-b touches the square of half side `half_extent`.
  bool SegmentTouchesSquare(const GeoPoint& a, const GeoPoint& b,
                            double half_extent) const;

 private:
  GeoPoint center_;
  double cos_lat_;
};

}  // namespace streetnav

#endif  // STREETNAV_GEO_H_
