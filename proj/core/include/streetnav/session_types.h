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


#ifndef STREETNAV_SESSION_TYPES_H_
#define STREETNAV_SESSION_TYPES_H_

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "streetnav/geo.h"
#include "streetnav/nav_graph.h"

namespace streetnav {

enum class PanDirection { kLeft, kRight };
enum class StepDirection { kForward, kBackward };

struct Position {
  std::string pano_id;
  Heading heading;

  friend bool operator==(const Position&, const Position&) = default;
};

struct VisitRecord {
  int count = 0;
  int64_t last_visit_ms = 0;
  // Time of the visit before the latest one, if any.
  std::optional<int64_t> previous_visit_ms;

  friend bool operator==(const VisitRecord&, const VisitRecord&) = default;
};

struct SessionState {
  std::string current_pano_id;
  Heading heading;
  std::map<std::string, VisitRecord> visits;
  std::deque<Position> undo_stack;  // back() is the most recent entry
  std::optional<std::string> selected_place;
  int64_t last_event_ms = 0;

  Position position() const { return {current_pano_id, heading}; }

  friend bool operator==(const SessionState&, const SessionState&) = default;
};

enum class EventKind {
  kPan,
  kStep,
  kJump,
  kTeleport,
  kGoBack,
  kDescribe,
  kChatTurn,
  kHotkey,
};

const char* EventKindName(EventKind kind);
std::optional<EventKind> EventKindFromName(const std::string& name);

struct PanPayload {
  PanDirection direction = PanDirection::kRight;
  Heading from;
  Heading to;
  friend bool operator==(const PanPayload&, const PanPayload&) = default;
};

struct StepPayload {
  StepDirection direction = StepDirection::kForward;
  Position from;
  std::string to_pano;
  double distance_m = 0.0;
  friend bool operator==(const StepPayload&, const StepPayload&) = default;
};

struct JumpPayload {
  Position from;
  std::string to_pano;
  JumpKind jump_kind = JumpKind::kMaxDistance;
  double distance_m = 0.0;
  friend bool operator==(const JumpPayload&, const JumpPayload&) = default;
};

inline constexpr char kTeleportReasonStart[] = "start";
inline constexpr char kTeleportReasonSearch[] = "search";

struct TeleportPayload {
  std::string reason = kTeleportReasonSearch;
  std::string query;
  std::optional<Position> from;  // absent for the session start
  Position to;
  std::optional<std::string> selected_place;
  double distance_m = 0.0;
  friend bool operator==(const TeleportPayload&, const TeleportPayload&) =
      default;
};

struct GoBackPayload {
  Position from;
  Position to;
  friend bool operator==(const GoBackPayload&, const GoBackPayload&) = default;
};

// Free-form record for AI interactions and informational hotkeys. Fields
// keep their insertion order in the export.
struct NotePayload {
  std::vector<std::pair<std::string, std::string>> fields;
  friend bool operator==(const NotePayload&, const NotePayload&) = default;
};

using EventPayload = std::variant<PanPayload, StepPayload, JumpPayload,
                                  TeleportPayload, GoBackPayload, NotePayload>;

struct SessionEvent {
  int64_t ts_ms = 0;
  EventKind kind = EventKind::kHotkey;
  EventPayload payload;

  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

const char* PanDirectionName(PanDirection d);
const char* StepDirectionName(StepDirection d);
const char* JumpKindName(JumpKind k);

}  // namespace streetnav

#endif  // STREETNAV_SESSION_TYPES_H_
