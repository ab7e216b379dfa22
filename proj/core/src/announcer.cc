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


#include "streetnav/announcer.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_replace.h"
#include "streetnav/message_catalog.h"

namespace streetnav {

namespace {

int Priority(RelativePosition p) {
  switch (p) {
    case RelativePosition::kInFront:
      return 0;
    case RelativePosition::kToYourLeft:
      return 1;
    case RelativePosition::kToYourRight:
      return 2;
    case RelativePosition::kBehind:
      return 3;
  }
  return 3;
}

// Phrasing inside the grouped places clause.
const char* GroupPhrase(RelativePosition p) {
  switch (p) {
    case RelativePosition::kInFront:
      return "ahead of you";
    case RelativePosition::kToYourLeft:
      return "to your left";
    case RelativePosition::kToYourRight:
      return "to your right";
    case RelativePosition::kBehind:
      return "behind you";
  }
  return "ahead of you";
}

// Phrasing in movement messages.
const char* MovePhrase(RelativePosition p) {
  switch (p) {
    case RelativePosition::kInFront:
      return "in front of you";
    case RelativePosition::kToYourLeft:
      return "on your left";
    case RelativePosition::kToYourRight:
      return "on your right";
    case RelativePosition::kBehind:
      return "behind you";
  }
  return "in front of you";
}

std::string TypeLabel(const std::string& place_type) {
  return absl::StrReplaceAll(place_type, {{"_", " "}});
}

std::string PlaceItem(const Place& place) {
  if (place.place_type.empty()) return place.display_name;
  const std::string type = TypeLabel(place.place_type);
  const char first = absl::ascii_tolower(type[0]);
  const bool vowel = first == 'a' || first == 'e' || first == 'i' ||
                     first == 'o' || first == 'u';
  return RenderMessage("places.item", {{"article", vowel ? "an" : "a"},
                                       {"type", type},
                                       {"name", place.display_name}});
}

std::string Radius(const NavConfig& cfg) {
  return FormatDistance(cfg.nearby_radius_m);
}

// The "There are N places within R, including: ..." sentence.
std::string PlacesSentence(const std::vector<NearbyPlace>& places,
                           const NavConfig& cfg) {
  if (places.empty()) {
    return RenderMessage("places.none", {{"radius", Radius(cfg)}});
  }
  std::vector<std::string> groups;
  for (size_t i = 0; i < places.size();) {
    size_t j = i;
    std::vector<std::string> items;
    double max_d = 0.0;
    while (j < places.size() && places[j].position == places[i].position) {
      items.push_back(PlaceItem(places[j].place));
      max_d = std::max(max_d, places[j].distance_m);
      ++j;
    }
    const bool one = items.size() == 1;
    groups.push_back(RenderMessage(
        one ? "places.group_one" : "places.group_many",
        {{"items", JoinEnglish(items)},
         {"position", GroupPhrase(places[i].position)},
         {"distance", FormatDistance(max_d)}}));
    i = j;
  }
  std::string joined = groups.back();
  if (groups.size() > 1) {
    groups.pop_back();
    joined = absl::StrCat(absl::StrJoin(groups, "; "), ", and ", joined);
  }
  if (places.size() == 1) {
    return RenderMessage("places.one",
                         {{"radius", Radius(cfg)}, {"groups", joined}});
  }
  return RenderMessage("places.many",
                       {{"count", NumberWord(static_cast<long>(places.size()))},
                        {"radius", Radius(cfg)},
                        {"groups", joined}});
}

std::string DirectionsList(const std::vector<Heading>& movements) {
  std::vector<std::string> names;
  for (Heading h : movements) names.push_back(CompassName(h));
  return JoinEnglish(names);
}

bool SameRoadNames(const std::vector<std::string>& a,
                   const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (const std::string& x : a) {
    if (std::none_of(b.begin(), b.end(), [&](const std::string& y) {
          return SameRoad(x, y);
        })) {
      return false;
    }
  }
  return true;
}

std::string Locality(const StreetAddress& a) {
  std::vector<std::string> parts;
  if (a.neighborhood) parts.push_back(*a.neighborhood);
  parts.push_back(a.city);
  if (a.state_province) parts.push_back(*a.state_province);
  parts.push_back(a.country);
  return absl::StrJoin(parts, ", ");
}

// City, state and country fields of `to` that differ from `from`.
std::string ChangedLocality(const StreetAddress& from, const StreetAddress& to) {
  std::vector<std::string> parts;
  if (from.city != to.city) parts.push_back(to.city);
  if (from.state_province != to.state_province && to.state_province) {
    parts.push_back(*to.state_province);
  }
  if (from.country != to.country) parts.push_back(to.country);
  return absl::StrJoin(parts, ", ");
}

}  // namespace

const char* VoiceChannelName(VoiceChannel c) {
  return c == VoiceChannel::kStatus ? "status" : "chat";
}

const char* FragmentTypeName(FragmentType t) {
  switch (t) {
    case FragmentType::kHeading:
      return "heading";
    case FragmentType::kMovement:
      return "movement";
    case FragmentType::kAddress:
      return "address";
    case FragmentType::kIntersection:
      return "intersection";
    case FragmentType::kPlaces:
      return "places";
    case FragmentType::kVisit:
      return "visit";
    case FragmentType::kInfo:
      return "info";
  }
  return "info";
}

bool StatusMessage::HasFragment(FragmentType t) const {
  return std::any_of(fragments.begin(), fragments.end(),
                     [t](const Fragment& f) { return f.type == t; });
}

MessageBuilder& MessageBuilder::Add(FragmentType type,
                                    const std::string& sentence) {
  fragments_.push_back(
      Fragment{type, fragments_.empty() ? sentence : absl::StrCat(" ", sentence)});
  return *this;
}

StatusMessage MessageBuilder::Build() && {
  StatusMessage m;
  m.channel = channel_;
  for (const Fragment& f : fragments_) m.text += f.text;
  m.fragments = std::move(fragments_);
  return m;
}

StatusMessage PlainMessage(const std::string& text, VoiceChannel channel,
                           FragmentType type) {
  MessageBuilder b(channel);
  b.Add(type, text);
  return std::move(b).Build();
}

absl::StatusOr<LocalContext> BuildLocalContext(const MapServices& services,
                                               const Panorama& pano,
                                               Heading heading,
                                               const NavConfig& cfg) {
  LocalContext ctx;
  ctx.pano_id = pano.id;
  ctx.address = pano.address;
  ctx.heading = heading;
  auto places = services.places->PlacesNear(pano.location, cfg.nearby_radius_m);
  if (!places.ok()) return places.status();
  for (const PlaceHit& hit : *places) {
    NearbyPlace np;
    np.place = hit.place;
    np.distance_m = hit.distance_m;
    if (auto b = InitialBearing(pano.location, hit.place.location); b.ok()) {
      np.offset_deg = RelativeHeading(*b, heading);
    }
    np.position = RelativePositionOf(np.offset_deg);
    ctx.nearby.push_back(std::move(np));
  }
  std::sort(ctx.nearby.begin(), ctx.nearby.end(),
            [](const NearbyPlace& a, const NearbyPlace& b) {
              if (Priority(a.position) != Priority(b.position)) {
                return Priority(a.position) < Priority(b.position);
              }
              if (a.distance_m != b.distance_m) {
                return a.distance_m < b.distance_m;
              }
              return a.place.id < b.place.id;
            });
  auto here = IntersectionInGrid(services, pano.location, cfg);
  if (!here.ok()) return here.status();
  ctx.at_intersection = *std::move(here);
  return ctx;
}

long RoundedMeters(double meters) {
  if (meters < 100.0) return std::lround(meters);
  return std::lround(meters / 10.0) * 10;
}

std::string FormatDistance(double meters) {
  if (meters >= 1000.0) {
    const long km = std::lround(meters / 1000.0);
    std::string digits = absl::StrCat(km);
    std::string grouped;
    const int n = static_cast<int>(digits.size());
    for (int i = 0; i < n; ++i) {
      if (i > 0 && (n - i) % 3 == 0) grouped.push_back(',');
      grouped.push_back(digits[i]);
    }
    return absl::StrCat(grouped, " km");
  }
  const long m = RoundedMeters(meters);
  if (m >= 1000) return "1 km";
  return absl::StrCat(m, m == 1 ? " meter" : " meters");
}

std::string NumberWord(long n) {
  static const char* kWords[] = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
      "twenty"};
  if (n >= 0 && n <= 20) return kWords[n];
  return absl::StrCat(n);
}

std::string FormatYearMonth(const YearMonth& ym) {
  static const char* kMonths[] = {
      "January", "February", "March",     "April",   "May",      "June",
      "July",    "August",   "September", "October", "November", "December"};
  const int m = std::clamp(ym.month, 1, 12);
  return absl::StrCat(kMonths[m - 1], " ", ym.year);
}

std::string JoinEnglish(const std::vector<std::string>& items) {
  if (items.empty()) return "";
  if (items.size() == 1) return items[0];
  if (items.size() == 2) return absl::StrCat(items[0], " and ", items[1]);
  std::vector<std::string> head(items.begin(), items.end() - 1);
  return absl::StrCat(absl::StrJoin(head, ", "), ", and ", items.back());
}

StatusMessage PanAnnouncement(const PanOutcome& outcome,
                              const EgocentricGraph& graph,
                              const LocalContext& ctx,
                              const MapServices& services,
                              const NavConfig& cfg) {
  MessageBuilder b;
  b.Add(FragmentType::kHeading,
        RenderMessage("pan.facing", {{"heading", CompassName(outcome.to)}}));
  std::optional<std::string> next = NextPano(graph, outcome.to, cfg);
  std::optional<Panorama> next_pano;
  if (next) {
    if (auto p = services.panoramas->GetPanorama(*next); p.ok()) next_pano = *p;
  }
  if (next_pano) {
    b.Add(FragmentType::kMovement,
          RenderMessage("pan.forward",
                        {{"address", next_pano->address.StreetLine()}}));
  } else {
    b.Add(FragmentType::kMovement, RenderMessage("pan.no_forward"));
  }
  std::vector<const NearbyPlace*> facing;
  for (const NearbyPlace& np : ctx.nearby) {
    if (std::abs(np.offset_deg) <= cfg.facing_cone_deg + kAngleEpsilonDegrees &&
        np.distance_m <= cfg.facing_max_distance_m + kDistanceEpsilonMeters) {
      facing.push_back(&np);
    }
  }
  std::stable_sort(facing.begin(), facing.end(),
                   [](const NearbyPlace* a, const NearbyPlace* b) {
                     return a->distance_m < b->distance_m;
                   });
  if (!facing.empty()) {
    std::vector<std::string> items;
    for (const NearbyPlace* np : facing) {
      items.push_back(RenderMessage(
          "pan.facing_item", {{"name", np->place.display_name},
                              {"distance", FormatDistance(np->distance_m)}}));
    }
    b.Add(FragmentType::kPlaces,
          RenderMessage("pan.facing_places", {{"places", JoinEnglish(items)}}));
  }
  return std::move(b).Build();
}

StatusMessage MovementAnnouncement(const LocalContext& prev,
                                   const LocalContext& next,
                                   const MoveOutcome& outcome,
                                   const NavConfig& cfg) {
  MessageBuilder b;
  const std::string distance = FormatDistance(outcome.distance_m);
  switch (outcome.kind) {
    case MoveKind::kStep:
      b.Add(FragmentType::kMovement,
            RenderMessage("move.step",
                          {{"direction", outcome.direction ==
                                                 StepDirection::kForward
                                             ? "forward"
                                             : "backward"},
                           {"distance", distance}}));
      break;
    case MoveKind::kJump:
      b.Add(FragmentType::kMovement,
            RenderMessage("move.jump", {{"distance", distance}}));
      break;
    case MoveKind::kGoBack:
      b.Add(FragmentType::kMovement,
            RenderMessage("move.back", {{"distance", distance}}));
      break;
  }

  if (!SameRoad(prev.address.road_name, next.address.road_name)) {
    b.Add(FragmentType::kAddress,
          RenderMessage("move.road", {{"road", next.address.road_name}}));
  }

  const auto& pi = prev.at_intersection;
  const auto& ni = next.at_intersection;
  const bool same_intersection =
      pi.has_value() == ni.has_value() &&
      (!pi.has_value() || SameRoadNames(pi->road_names, ni->road_names));
  if (!same_intersection) {
    if (pi) {
      b.Add(FragmentType::kIntersection,
            RenderMessage("move.leave_intersection",
                          {{"roads", JoinEnglish(pi->road_names)}}));
    }
    if (ni) {
      b.Add(FragmentType::kIntersection,
            RenderMessage("move.arrive_intersection",
                          {{"roads", JoinEnglish(ni->road_names)}}));
    }
  }

  std::map<std::string, const NearbyPlace*> before;
  for (const NearbyPlace& np : prev.nearby) before[np.place.id] = &np;
  for (const NearbyPlace& np : next.nearby) {
    const std::string d = FormatDistance(np.distance_m);
    auto it = before.find(np.place.id);
    if (it == before.end() || it->second->position != np.position) {
      b.Add(FragmentType::kPlaces,
            RenderMessage("move.place_now",
                          {{"name", np.place.display_name},
                           {"position", MovePhrase(np.position)},
                           {"distance", d}}));
    } else if (FormatDistance(it->second->distance_m) != d) {
      b.Add(FragmentType::kPlaces,
            RenderMessage("move.place_still",
                          {{"name", np.place.display_name},
                           {"position", MovePhrase(np.position)},
                           {"distance", d}}));
    }
  }
  for (const NearbyPlace& np : prev.nearby) {
    const bool still_here =
        std::any_of(next.nearby.begin(), next.nearby.end(),
                    [&](const NearbyPlace& n) { return n.place.id == np.place.id; });
    if (!still_here) {
      b.Add(FragmentType::kPlaces,
            RenderMessage("move.place_gone", {{"name", np.place.display_name},
                                              {"radius", Radius(cfg)}}));
    }
  }
  if (outcome.prior_visits > 0) {
    b.Add(FragmentType::kVisit, RenderMessage("move.visited"));
  }
  return std::move(b).Build();
}

StatusMessage TeleportAnnouncement(const TeleportOutcome& outcome,
                                   const LocalContext& ctx,
                                   const std::vector<Heading>& movements,
                                   const NavConfig& cfg) {
  MessageBuilder b;
  const std::string locality =
      ChangedLocality(outcome.from_address, outcome.to_address);
  MessageArgs trip = {{"distance", FormatDistance(outcome.distance_m)},
                      {"origin", outcome.origin_name},
                      {"destination", outcome.destination.display_name}};
  if (locality.empty()) {
    b.Add(FragmentType::kMovement, RenderMessage("teleport.trip", trip));
  } else {
    trip.emplace_back("locality", locality);
    b.Add(FragmentType::kMovement,
          RenderMessage("teleport.trip_locality", trip));
  }
  std::vector<NearbyPlace> places;
  for (const NearbyPlace& np : ctx.nearby) {
    if (outcome.destination.place_id && np.place.id == *outcome.destination.place_id) {
      continue;
    }
    places.push_back(np);
  }
  b.Add(FragmentType::kPlaces, PlacesSentence(places, cfg));
  const std::string heading = CompassName(outcome.to.heading);
  if (movements.empty()) {
    b.Add(FragmentType::kHeading,
          RenderMessage("teleport.facing_no_moves", {{"heading", heading}}));
  } else {
    const long n = static_cast<long>(movements.size());
    b.Add(FragmentType::kHeading,
          RenderMessage("teleport.facing_moves",
                        {{"heading", heading},
                         {"count", NumberWord(n)},
                         {"noun", n == 1 ? "direction" : "directions"},
                         {"directions", DirectionsList(movements)}}));
  }
  return std::move(b).Build();
}

StatusMessage AvailableMovementsAnnouncement(
    const EgocentricGraph& graph, Heading heading,
    const std::optional<std::string>& attempted, const NavConfig& cfg) {
  MessageBuilder b;
  if (attempted) {
    b.Add(FragmentType::kMovement,
          RenderMessage("moves.blocked", {{"direction", *attempted},
                                          {"heading", CompassName(heading)}}));
  }
  const std::vector<Heading> moves = AvailableMovements(graph, cfg);
  if (moves.empty()) {
    b.Add(FragmentType::kMovement, RenderMessage("moves.none"));
  } else {
    const long n = static_cast<long>(moves.size());
    b.Add(FragmentType::kMovement,
          RenderMessage("moves.list",
                        {{"count", NumberWord(n)},
                         {"noun", n == 1 ? "direction" : "directions"},
                         {"directions", DirectionsList(moves)}}));
  }
  return std::move(b).Build();
}

StatusMessage NearbyPlacesAnnouncement(const LocalContext& ctx,
                                       const NavConfig& cfg) {
  return PlainMessage(PlacesSentence(ctx.nearby, cfg), VoiceChannel::kStatus,
                      FragmentType::kPlaces);
}

absl::StatusOr<StatusMessage> IntersectionAnnouncement(
    const LocalContext& ctx, const MapServices& services,
    const GeoPoint& location, const NavConfig& cfg) {
  MessageBuilder b;
  absl::StatusOr<std::optional<IntersectionHit>> ahead;
  if (ctx.at_intersection) {
    b.Add(FragmentType::kIntersection,
          RenderMessage("intersection.current",
                        {{"roads", JoinEnglish(ctx.at_intersection->road_names)}}));
    ahead = DetectNextIntersection(services, location, ctx.heading, cfg,
                                   ctx.at_intersection->road_names);
  } else {
    ahead = DetectIntersectionAlong(services, location, ctx.heading, cfg);
  }
  if (!ahead.ok()) return ahead.status();
  if (ahead->has_value()) {
    b.Add(FragmentType::kIntersection,
          RenderMessage("intersection.next",
                        {{"roads", JoinEnglish((*ahead)->road_names)},
                         {"distance",
                          FormatDistance((*ahead)->distance_from_origin_m)}}));
  } else {
    b.Add(FragmentType::kIntersection,
          RenderMessage("intersection.none_ahead",
                        {{"max", FormatDistance(cfg.jump_max_m)}}));
  }
  return std::move(b).Build();
}

StatusMessage WhereAmIAnnouncement(const LocalContext& ctx) {
  return PlainMessage(
      RenderMessage("where.here",
                    {{"address", absl::StrCat(ctx.address.StreetLine(), ", ",
                                              Locality(ctx.address))},
                     {"heading", CompassName(ctx.heading)}}),
      VoiceChannel::kStatus, FragmentType::kAddress);
}

StatusMessage VisitAnnouncement(const VisitRecord& visit, int64_t now_ms) {
  if (visit.count <= 1 || !visit.previous_visit_ms) {
    return PlainMessage(RenderMessage("visits.first"), VoiceChannel::kStatus,
                        FragmentType::kVisit);
  }
  const int64_t secs = std::max<int64_t>(0, now_ms - *visit.previous_visit_ms) / 1000;
  std::string ago;
  if (secs < 60) {
    ago = absl::StrCat(secs, secs == 1 ? " second" : " seconds");
  } else if (secs < 3600) {
    const int64_t m = secs / 60;
    ago = absl::StrCat(m, m == 1 ? " minute" : " minutes");
  } else {
    const int64_t h = secs / 3600;
    ago = absl::StrCat(h, h == 1 ? " hour" : " hours");
  }
  return PlainMessage(
      RenderMessage("visits.repeat",
                    {{"count", absl::StrCat(visit.count)}, {"ago", ago}}),
      VoiceChannel::kStatus, FragmentType::kVisit);
}

StatusMessage PanoMetadataAnnouncement(const Panorama& pano) {
  return PlainMessage(
      RenderMessage("photo.taken",
                    {{"date", FormatYearMonth(pano.capture_date)},
                     {"photographer",
                      pano.photographer && !pano.photographer->empty()
                          ? *pano.photographer
                          : RenderMessage("photo.unknown_photographer")}}),
      VoiceChannel::kStatus, FragmentType::kInfo);
}

}  // namespace streetnav
