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


#ifndef STREETNAV_SESSION_H_
#define STREETNAV_SESSION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "streetnav/event_log.h"
#include "streetnav/nav_config.h"
#include "streetnav/nav_graph.h"
#include "streetnav/providers.h"
#include "streetnav/session_types.h"

namespace streetnav {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual int64_t NowMs() const = 0;
};

class SystemClock final : public Clock {
 public:
  int64_t NowMs() const override;
};

// Deterministic clock for tests and scripted runs.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(int64_t start_ms = 0, int64_t auto_advance_ms = 0)
      : now_(start_ms), auto_advance_(auto_advance_ms) {}
  int64_t NowMs() const override { return now_.fetch_add(auto_advance_); }
  void Advance(int64_t ms) { now_ += ms; }
  void Set(int64_t ms) { now_ = ms; }

 private:
  mutable std::atomic<int64_t> now_;
  const int64_t auto_advance_;
};

struct PanOutcome {
  PanDirection direction = PanDirection::kRight;
  Heading from;
  Heading to;
};

enum class MoveKind { kStep, kJump, kGoBack };

struct MoveOutcome {
  // False for a blocked step/jump or an empty undo stack; nothing changed.
  bool moved = false;
  MoveKind kind = MoveKind::kStep;
  StepDirection direction = StepDirection::kForward;
  Position from;
  Position to;
  double distance_m = 0.0;
  std::optional<JumpKind> jump_kind;
  std::optional<IntersectionHit> intersection;
  // Visits to `to` before this arrival.
  int prior_visits = 0;
};

struct TeleportOutcome {
  std::string query;
  SearchResult destination;
  Position from;
  Position to;
  // Great-circle distance from the previous panorama to the destination.
  double distance_m = 0.0;
  // Name of where the user came from: the previous selected place if any,
  // else the previous street line.
  std::string origin_name;
  StreetAddress from_address;
  StreetAddress to_address;
};

// One user's navigation state. Not internally synchronized: the gateway
// serializes all calls for a session.
class Session {
 public:
  // Starts at `start_pano_id`, logging a start event. `clock` and `sink`
  // must outlive the session; `sink` may be null.
  static absl::StatusOr<std::unique_ptr<Session>> Start(
      const MapServices& services, const NavConfig& cfg,
      const std::string& start_pano_id, Heading heading, const Clock* clock,
      EventSink* sink);

  const SessionState& state() const { return state_; }
  const NavConfig& config() const { return cfg_; }
  const MapServices& services() const { return services_; }

  absl::StatusOr<Panorama> CurrentPano() const;
  absl::StatusOr<EgocentricGraph> CurrentGraph() const;

  PanOutcome Pan(PanDirection direction);
  absl::StatusOr<MoveOutcome> Step(StepDirection direction);
  absl::StatusOr<MoveOutcome> Jump();
  absl::StatusOr<TeleportOutcome> Teleport(const std::string& query);
  absl::StatusOr<MoveOutcome> GoBack();

  VisitRecord VisitInfo() const;

  // Records an AI interaction or informational request.
  void Note(EventKind kind, NotePayload payload);

 private:
  Session(const MapServices& services, const NavConfig& cfg,
          const Clock* clock, EventSink* sink);

  int64_t NextTimestamp();
  void Emit(EventKind kind, EventPayload payload);
  absl::StatusOr<MoveOutcome> MoveTo(MoveKind kind, StepDirection direction,
                                     const Panorama& from,
                                     const std::string& to_id,
                                     std::optional<JumpKind> jump_kind);

  MapServices services_;
  NavConfig cfg_;
  const Clock* clock_;
  EventSink* sink_;
  SessionState state_;
};

}  // namespace streetnav

#endif  // STREETNAV_SESSION_H_
