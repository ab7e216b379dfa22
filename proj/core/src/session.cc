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

#include <algorithm>
#include <chrono>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace streetnav {

namespace {

NotePayload NoMoveNote(const char* action, const char* direction) {
  NotePayload note;
  note.fields.emplace_back("action", action);
  if (direction != nullptr) note.fields.emplace_back("direction", direction);
  note.fields.emplace_back("result", "no_move");
  return note;
}

}  // namespace

const char* EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kPan:
      return "Pan";
    case EventKind::kStep:
      return "Step";
    case EventKind::kJump:
      return "Jump";
    case EventKind::kTeleport:
      return "Teleport";
    case EventKind::kGoBack:
      return "GoBack";
    case EventKind::kDescribe:
      return "Describe";
    case EventKind::kChatTurn:
      return "ChatTurn";
    case EventKind::kHotkey:
      return "Hotkey";
  }
  return "Hotkey";
}

std::optional<EventKind> EventKindFromName(const std::string& name) {
  for (EventKind k :
       {EventKind::kPan, EventKind::kStep, EventKind::kJump,
        EventKind::kTeleport, EventKind::kGoBack, EventKind::kDescribe,
        EventKind::kChatTurn, EventKind::kHotkey}) {
    if (name == EventKindName(k)) return k;
  }
  return std::nullopt;
}

const char* PanDirectionName(PanDirection d) {
  return d == PanDirection::kLeft ? "Left" : "Right";
}

const char* StepDirectionName(StepDirection d) {
  return d == StepDirection::kForward ? "Forward" : "Backward";
}

const char* JumpKindName(JumpKind k) {
  return k == JumpKind::kToIntersection ? "ToIntersection" : "MaxDistance";
}

int64_t SystemClock::NowMs() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Session::Session(const MapServices& services, const NavConfig& cfg,
                 const Clock* clock, EventSink* sink)
    : services_(services), cfg_(cfg), clock_(clock), sink_(sink) {}

absl::StatusOr<std::unique_ptr<Session>> Session::Start(
    const MapServices& services, const NavConfig& cfg,
    const std::string& start_pano_id, Heading heading, const Clock* clock,
    EventSink* sink) {
  if (auto s = cfg.Validate(); !s.ok()) return s;
  if (clock == nullptr) return absl::InvalidArgumentError("clock is required");
  auto pano = services.panoramas->GetPanorama(start_pano_id);
  if (!pano.ok()) return pano.status();
  std::unique_ptr<Session> session(new Session(services, cfg, clock, sink));
  TeleportPayload start;
  start.reason = kTeleportReasonStart;
  start.to = Position{pano->id, heading.SnappedToOctant()};
  session->Emit(EventKind::kTeleport, std::move(start));
  return session;
}

absl::StatusOr<Panorama> Session::CurrentPano() const {
  return services_.panoramas->GetPanorama(state_.current_pano_id);
}

absl::StatusOr<EgocentricGraph> Session::CurrentGraph() const {
  auto pano = CurrentPano();
  if (!pano.ok()) return pano.status();
  return BuildEgocentricGraph(services_, *pano, cfg_);
}

int64_t Session::NextTimestamp() {
  return std::max(clock_->NowMs(), state_.last_event_ms);
}

void Session::Emit(EventKind kind, EventPayload payload) {
  SessionEvent ev{NextTimestamp(), kind, std::move(payload)};
  ApplyEvent(state_, ev, cfg_.undo_depth);
  if (sink_ != nullptr) sink_->Append(ev);
}

PanOutcome Session::Pan(PanDirection direction) {
  const double delta = direction == PanDirection::kLeft
                           ? -cfg_.pan_increment_deg
                           : cfg_.pan_increment_deg;
  PanOutcome out{direction, state_.heading,
                 state_.heading.Rotated(delta).SnappedToOctant()};
  Emit(EventKind::kPan, PanPayload{direction, out.from, out.to});
  return out;
}

absl::StatusOr<MoveOutcome> Session::MoveTo(MoveKind kind,
                                            StepDirection direction,
                                            const Panorama& from,
                                            const std::string& to_id,
                                            std::optional<JumpKind> jump_kind) {
  auto to = services_.panoramas->GetPanorama(to_id);
  if (!to.ok()) return to.status();
  MoveOutcome out;
  out.moved = true;
  out.kind = kind;
  out.direction = direction;
  out.from = state_.position();
  out.to = Position{to->id, state_.heading};
  out.distance_m = HaversineDistance(from.location, to->location);
  out.jump_kind = jump_kind;
  if (auto it = state_.visits.find(to->id); it != state_.visits.end()) {
    out.prior_visits = it->second.count;
  }
  if (kind == MoveKind::kJump) {
    Emit(EventKind::kJump,
         JumpPayload{out.from, to->id, *jump_kind, out.distance_m});
  } else {
    Emit(EventKind::kStep,
         StepPayload{direction, out.from, to->id, out.distance_m});
  }
  return out;
}

absl::StatusOr<MoveOutcome> Session::Step(StepDirection direction) {
  auto pano = CurrentPano();
  if (!pano.ok()) return pano.status();
  auto graph = BuildEgocentricGraph(services_, *pano, cfg_);
  if (!graph.ok()) return graph.status();
  const std::optional<std::string> next =
      direction == StepDirection::kForward
          ? NextPano(*graph, state_.heading, cfg_)
          : PrevPano(*graph, state_.heading, cfg_);
  if (!next.has_value()) {
    Note(EventKind::kHotkey, NoMoveNote("step", StepDirectionName(direction)));
    MoveOutcome out;
    out.kind = MoveKind::kStep;
    out.direction = direction;
    out.from = out.to = state_.position();
    return out;
  }
  return MoveTo(MoveKind::kStep, direction, *pano, *next, std::nullopt);
}

absl::StatusOr<MoveOutcome> Session::Jump() {
  auto pano = CurrentPano();
  if (!pano.ok()) return pano.status();
  auto target = FindJumpTarget(services_, *pano, state_.heading, cfg_);
  if (!target.ok()) return target.status();
  if (!target->has_value()) {
    Note(EventKind::kHotkey, NoMoveNote("jump", nullptr));
    MoveOutcome out;
    out.kind = MoveKind::kJump;
    out.from = out.to = state_.position();
    return out;
  }
  auto out = MoveTo(MoveKind::kJump, StepDirection::kForward, *pano,
                    (*target)->pano_id, (*target)->kind);
  if (out.ok()) out->intersection = (*target)->intersection;
  return out;
}

absl::StatusOr<TeleportOutcome> Session::Teleport(const std::string& query) {
  auto results = services_.search->SearchText(query);
  if (!results.ok()) return results.status();
  if (results->empty()) {
    return absl::NotFoundError(absl::StrCat("No results for \"", query, "\"."));
  }
  const SearchResult& dest = results->front();
  auto nearest = services_.panoramas->NearestPano(dest.location);
  if (!nearest.ok()) return nearest.status();
  if (nearest->distance_m >
      cfg_.teleport_max_pano_distance_m + kDistanceEpsilonMeters) {
    return absl::FailedPreconditionError(
        absl::StrCat("No Street View imagery within ",
                     static_cast<int>(cfg_.teleport_max_pano_distance_m),
                     " meters of ", dest.display_name, "."));
  }
  auto from_pano = CurrentPano();
  if (!from_pano.ok()) return from_pano.status();

  TeleportOutcome out;
  out.query = query;
  out.destination = dest;
  out.from = state_.position();
  out.from_address = from_pano->address;
  out.to_address = nearest->pano.address;
  GeoPoint origin = from_pano->location;
  out.origin_name = from_pano->address.StreetLine();
  if (state_.selected_place.has_value()) {
    if (auto place = services_.places->GetPlace(*state_.selected_place);
        place.ok()) {
      origin = place->location;
      out.origin_name = place->display_name;
    }
  }
  out.distance_m = HaversineDistance(origin, dest.location);
  Heading heading = state_.heading;
  if (auto b = InitialBearing(nearest->pano.location, dest.location); b.ok()) {
    heading = b->SnappedToOctant();
  }
  out.to = Position{nearest->pano.id, heading};

  TeleportPayload payload;
  payload.reason = kTeleportReasonSearch;
  payload.query = query;
  payload.from = out.from;
  payload.to = out.to;
  payload.selected_place = dest.place_id;
  payload.distance_m = out.distance_m;
  Emit(EventKind::kTeleport, std::move(payload));
  return out;
}

absl::StatusOr<MoveOutcome> Session::GoBack() {
  MoveOutcome out;
  out.kind = MoveKind::kGoBack;
  out.from = state_.position();
  if (state_.undo_stack.empty()) {
    Note(EventKind::kHotkey, NoMoveNote("go_back", nullptr));
    out.to = out.from;
    return out;
  }
  out.to = state_.undo_stack.back();
  auto from = CurrentPano();
  if (!from.ok()) return from.status();
  auto to = services_.panoramas->GetPanorama(out.to.pano_id);
  if (!to.ok()) return to.status();
  out.moved = true;
  out.distance_m = HaversineDistance(from->location, to->location);
  if (auto it = state_.visits.find(out.to.pano_id); it != state_.visits.end()) {
    out.prior_visits = it->second.count;
  }
  Emit(EventKind::kGoBack, GoBackPayload{out.from, out.to});
  return out;
}

VisitRecord Session::VisitInfo() const {
  auto it = state_.visits.find(state_.current_pano_id);
  return it == state_.visits.end() ? VisitRecord{} : it->second;
}

void Session::Note(EventKind kind, NotePayload payload) {
  Emit(kind, std::move(payload));
}

}  // namespace streetnav
