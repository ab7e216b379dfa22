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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace streetnav {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double NormalizeDegrees(double d) {
  double r = std::fmod(d, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r -= 360.0;
  return r;
}

}  // namespace

double NormalizeLongitude(double lng) {
  double r = std::fmod(lng + 180.0, 360.0);
  if (r <= 0.0) r += 360.0;
  return r - 180.0;
}

absl::StatusOr<GeoPoint> GeoPoint::Create(double lat, double lng) {
  if (!std::isfinite(lat) || !std::isfinite(lng)) {
    return absl::InvalidArgumentError("coordinates must be finite");
  }
  if (lat < -90.0 || lat > 90.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("latitude out of range: ", lat));
  }
  return GeoPoint{lat, NormalizeLongitude(lng)};
}

Heading::Heading(double degrees) : degrees_(NormalizeDegrees(degrees)) {}

Heading Heading::FromOctant(int index) {
  return Heading(45.0 * (((index % 8) + 8) % 8));
}

int Heading::NearestOctant() const {
  return static_cast<int>(std::floor((degrees_ + 22.5) / 45.0)) % 8;
}

bool Heading::IsOctant() const {
  return std::fmod(degrees_, 45.0) == 0.0;
}

double HaversineDistance(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlambda = NormalizeLongitude(b.lng - a.lng) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlambda / 2.0);
  double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusMeters * std::asin(std::sqrt(h));
}

absl::StatusOr<Heading> InitialBearing(const GeoPoint& from,
                                       const GeoPoint& to) {
  if (from == to) {
    return absl::InvalidArgumentError("bearing between coincident points");
  }
  const double phi1 = from.lat * kDegToRad;
  const double phi2 = to.lat * kDegToRad;
  const double dlambda = NormalizeLongitude(to.lng - from.lng) * kDegToRad;
  const double y = std::sin(dlambda) * std::cos(phi2);
  const double x = std::cos(phi1) * std::sin(phi2) -
                   std::sin(phi1) * std::cos(phi2) * std::cos(dlambda);
  return Heading(std::atan2(y, x) * kRadToDeg);
}

GeoPoint DestinationPoint(const GeoPoint& origin, Heading bearing,
                          double distance_m) {
  const double delta = distance_m / kEarthRadiusMeters;
  const double theta = bearing.degrees() * kDegToRad;
  const double phi1 = origin.lat * kDegToRad;
  const double lambda1 = origin.lng * kDegToRad;
  const double sin_phi2 = std::sin(phi1) * std::cos(delta) +
                          std::cos(phi1) * std::sin(delta) * std::cos(theta);
  const double phi2 = std::asin(std::clamp(sin_phi2, -1.0, 1.0));
  const double lambda2 =
      lambda1 + std::atan2(std::sin(theta) * std::sin(delta) * std::cos(phi1),
                           std::cos(delta) - std::sin(phi1) * sin_phi2);
  return GeoPoint{phi2 * kRadToDeg, NormalizeLongitude(lambda2 * kRadToDeg)};
}

GeoPoint OffsetMeters(const GeoPoint& origin, double east_m, double north_m) {
  const double cos_lat = std::cos(origin.lat * kDegToRad);
  return GeoPoint{
      origin.lat + north_m / kEarthRadiusMeters * kRadToDeg,
      NormalizeLongitude(origin.lng +
                         east_m / (kEarthRadiusMeters * cos_lat) * kRadToDeg)};
}

const std::array<std::string, 8>& CompassNames() {
  static const std::array<std::string, 8> kNames = {
      "North", "Northeast", "East", "Southeast",
      "South", "Southwest", "West", "Northwest"};
  return kNames;
}

const std::string& CompassName(Heading h) {
  return CompassNames()[h.NearestOctant()];
}

double RelativeHeading(Heading target_bearing, Heading user_heading) {
  double d = target_bearing.degrees() - user_heading.degrees();
  // d is in (-360, 360); fold into (-180, 180].
  if (d > 180.0) d -= 360.0;
  if (d <= -180.0) d += 360.0;
  return d;
}

RelativePosition RelativePositionOf(double o) {
  if (std::abs(o) < 45.0) return RelativePosition::kInFront;
  if (std::abs(o) >= 135.0) return RelativePosition::kBehind;
  return o > 0.0 ? RelativePosition::kToYourRight
                 : RelativePosition::kToYourLeft;
}

const char* RelativePositionName(RelativePosition p) {
  switch (p) {
    case RelativePosition::kInFront:
      return "InFront";
    case RelativePosition::kToYourRight:
      return "ToYourRight";
    case RelativePosition::kBehind:
      return "Behind";
    case RelativePosition::kToYourLeft:
      return "ToYourLeft";
  }
  return "InFront";
}

TangentPlane::TangentPlane(const GeoPoint& center)
    : center_(center), cos_lat_(std::cos(center.lat * kDegToRad)) {}

TangentPlane::Xy TangentPlane::Project(const GeoPoint& p) const {
  return Xy{NormalizeLongitude(p.lng - center_.lng) * kDegToRad * cos_lat_ *
                kEarthRadiusMeters,
            (p.lat - center_.lat) * kDegToRad * kEarthRadiusMeters};
}

bool TangentPlane::InSquare(const GeoPoint& p, double half_extent) const {
  const Xy xy = Project(p);
  const double limit = half_extent + kDistanceEpsilonMeters;
  return std::abs(xy.x) <= limit && std::abs(xy.y) <= limit;
}

bool TangentPlane::SegmentTouchesSquare(const GeoPoint& a, const GeoPoint& b,
                                        double half_extent) const {
  // Liang-Barsky clipping against [-e, e]^2.
  const Xy p = Project(a);
  const Xy q = Project(b);
  const double e = half_extent + kDistanceEpsilonMeters;
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  double t0 = 0.0;
  double t1 = 1.0;
  const double pk[4] = {-dx, dx, -dy, dy};
  const double qk[4] = {p.x + e, e - p.x, p.y + e, e - p.y};
  for (int i = 0; i < 4; ++i) {
    if (pk[i] == 0.0) {
      if (qk[i] < 0.0) return false;
      continue;
    }
    const double t = qk[i] / pk[i];
    if (pk[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

}  // namespace streetnav
