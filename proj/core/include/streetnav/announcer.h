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


#ifndef STREETNAV_ANNOUNCER_H_
#define STREETNAV_ANNOUNCER_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/nav_config.h"
#include "streetnav/nav_graph.h"
#include "streetnav/providers.h"
#include "streetnav/session.h"

namespace streetnav {

enum class VoiceChannel { kStatus, kChat };
const char* VoiceChannelName(VoiceChannel c);

enum class FragmentType {
  kHeading,
  kMovement,
  kAddress,
  kIntersection,
  kPlaces,
  kVisit,
  kInfo,
};
const char* FragmentTypeName(FragmentType t);

struct Fragment {
  FragmentType type = FragmentType::kInfo;
  std::string text;
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// `text` is always the concatenation of the fragment texts.
struct StatusMessage {
  std::string text;
  VoiceChannel channel = VoiceChannel::kStatus;
  std::vector<Fragment> fragments;

  bool HasFragment(FragmentType t) const;
  friend bool operator==(const StatusMessage&, const StatusMessage&) = default;
};

// Builds a message sentence by sentence, separating sentences with a space.
class MessageBuilder {
 public:
  explicit MessageBuilder(VoiceChannel channel = VoiceChannel::kStatus)
      : channel_(channel) {}
  MessageBuilder& Add(FragmentType type, const std::string& sentence);
  StatusMessage Build() &&;

 private:
  VoiceChannel channel_;
  std::vector<Fragment> fragments_;
};

StatusMessage PlainMessage(const std::string& text,
                           VoiceChannel channel = VoiceChannel::kStatus,
                           FragmentType type = FragmentType::kInfo);

struct NearbyPlace {
  Place place;
  double distance_m = 0.0;
  RelativePosition position = RelativePosition::kInFront;
  double offset_deg = 0.0;  // RelativeHeading(bearing to place, heading)
  friend bool operator==(const NearbyPlace&, const NearbyPlace&) = default;
};

struct LocalContext {
  std::string pano_id;
  StreetAddress address;
  std::optional<IntersectionHit> at_intersection;
  // Within nearby_radius, ordered front, left, right, behind, then by
  // distance and id.
  std::vector<NearbyPlace> nearby;
  Heading heading;
};

absl::StatusOr<LocalContext> BuildLocalContext(const MapServices& services,
                                               const Panorama& pano,
                                               Heading heading,
                                               const NavConfig& cfg);

// "26 meters", "120 meters", "2,391 km".
std::string FormatDistance(double meters);
// Integer rounding applied by FormatDistance below 1 km.
long RoundedMeters(double meters);
// "one" through "twenty", digits beyond.
std::string NumberWord(long n);
// "February 2025".
std::string FormatYearMonth(const YearMonth& ym);
// "A", "A and B", "A, B, and C".
std::string JoinEnglish(const std::vector<std::string>& items);

StatusMessage PanAnnouncement(const PanOutcome& outcome,
                              const EgocentricGraph& graph,
                              const LocalContext& ctx,
                              const MapServices& services,
                              const NavConfig& cfg);

StatusMessage MovementAnnouncement(const LocalContext& prev,
                                   const LocalContext& next,
                                   const MoveOutcome& outcome,
                                   const NavConfig& cfg);

StatusMessage TeleportAnnouncement(const TeleportOutcome& outcome,
                                   const LocalContext& ctx,
                                   const std::vector<Heading>& movements,
                                   const NavConfig& cfg);

// `attempted` names the blocked move ("forward", "backward") if any.
StatusMessage AvailableMovementsAnnouncement(
    const EgocentricGraph& graph, Heading heading,
    const std::optional<std::string>& attempted, const NavConfig& cfg);

StatusMessage NearbyPlacesAnnouncement(const LocalContext& ctx,
                                       const NavConfig& cfg);

absl::StatusOr<StatusMessage> IntersectionAnnouncement(
    const LocalContext& ctx, const MapServices& services,
    const GeoPoint& location, const NavConfig& cfg);

StatusMessage WhereAmIAnnouncement(const LocalContext& ctx);

StatusMessage VisitAnnouncement(const VisitRecord& visit, int64_t now_ms);

StatusMessage PanoMetadataAnnouncement(const Panorama& pano);

}  // namespace streetnav

#endif  // STREETNAV_ANNOUNCER_H_
