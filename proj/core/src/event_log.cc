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


#include "streetnav/event_log.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "json.hpp"

namespace streetnav {

namespace {

using Json = nlohmann::ordered_json;

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json EncodePosition(const Position& p) {
  return Json{{"pano", p.pano_id}, {"heading", p.heading.degrees()}};
}

const Json& Get(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DecodeError(absl::StrCat("missing field '", key, "'"));
  }
  return obj.at(key);
}

std::string GetString(const Json& obj, const char* key) {
  const Json& v = Get(obj, key);
  if (!v.is_string()) throw DecodeError(absl::StrCat("'", key, "' not a string"));
  return v.get<std::string>();
}

double GetNumber(const Json& obj, const char* key) {
  const Json& v = Get(obj, key);
  if (!v.is_number()) throw DecodeError(absl::StrCat("'", key, "' not a number"));
  return v.get<double>();
}

Position DecodePosition(const Json& obj) {
  return Position{GetString(obj, "pano"), Heading(GetNumber(obj, "heading"))};
}

PanDirection DecodePanDirection(const std::string& s) {
  if (s == "Left") return PanDirection::kLeft;
  if (s == "Right") return PanDirection::kRight;
  throw DecodeError(absl::StrCat("bad pan direction '", s, "'"));
}

StepDirection DecodeStepDirection(const std::string& s) {
  if (s == "Forward") return StepDirection::kForward;
  if (s == "Backward") return StepDirection::kBackward;
  throw DecodeError(absl::StrCat("bad step direction '", s, "'"));
}

JumpKind DecodeJumpKind(const std::string& s) {
  if (s == "ToIntersection") return JumpKind::kToIntersection;
  if (s == "MaxDistance") return JumpKind::kMaxDistance;
  throw DecodeError(absl::StrCat("bad jump kind '", s, "'"));
}

struct PayloadEncoder {
  Json operator()(const PanPayload& p) const {
    return Json{{"direction", PanDirectionName(p.direction)},
                {"from", p.from.degrees()},
                {"to", p.to.degrees()}};
  }
  Json operator()(const StepPayload& p) const {
    return Json{{"direction", StepDirectionName(p.direction)},
                {"from", EncodePosition(p.from)},
                {"to", p.to_pano},
                {"distance_m", p.distance_m}};
  }
  Json operator()(const JumpPayload& p) const {
    return Json{{"from", EncodePosition(p.from)},
                {"to", p.to_pano},
                {"jump_kind", JumpKindName(p.jump_kind)},
                {"distance_m", p.distance_m}};
  }
  Json operator()(const TeleportPayload& p) const {
    Json j = Json::object();
    j["reason"] = p.reason;
    j["query"] = p.query;
    if (p.from) j["from"] = EncodePosition(*p.from);
    j["to"] = EncodePosition(p.to);
    if (p.selected_place) j["selected_place"] = *p.selected_place;
    j["distance_m"] = p.distance_m;
    return j;
  }
  Json operator()(const GoBackPayload& p) const {
    return Json{{"from", EncodePosition(p.from)},
                {"to", EncodePosition(p.to)}};
  }
  Json operator()(const NotePayload& p) const {
    Json j = Json::object();
    for (const auto& [k, v] : p.fields) j[k] = v;
    return j;
  }
};

EventPayload DecodePayload(EventKind kind, const Json& j) {
  if (!j.is_object()) throw DecodeError("payload is not an object");
  switch (kind) {
    case EventKind::kPan:
      return PanPayload{DecodePanDirection(GetString(j, "direction")),
                        Heading(GetNumber(j, "from")),
                        Heading(GetNumber(j, "to"))};
    case EventKind::kStep:
      return StepPayload{DecodeStepDirection(GetString(j, "direction")),
                         DecodePosition(Get(j, "from")), GetString(j, "to"),
                         GetNumber(j, "distance_m")};
    case EventKind::kJump:
      return JumpPayload{DecodePosition(Get(j, "from")), GetString(j, "to"),
                         DecodeJumpKind(GetString(j, "jump_kind")),
                         GetNumber(j, "distance_m")};
    case EventKind::kTeleport: {
      TeleportPayload p;
      p.reason = GetString(j, "reason");
      p.query = GetString(j, "query");
      if (j.contains("from")) p.from = DecodePosition(j.at("from"));
      p.to = DecodePosition(Get(j, "to"));
      if (j.contains("selected_place")) {
        p.selected_place = GetString(j, "selected_place");
      }
      p.distance_m = GetNumber(j, "distance_m");
      return p;
    }
    case EventKind::kGoBack:
      return GoBackPayload{DecodePosition(Get(j, "from")),
                           DecodePosition(Get(j, "to"))};
    case EventKind::kDescribe:
    case EventKind::kChatTurn:
    case EventKind::kHotkey: {
      NotePayload p;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string()) {
          throw DecodeError(absl::StrCat("note field '", it.key(),
                                         "' not a string"));
        }
        p.fields.emplace_back(it.key(), it.value().get<std::string>());
      }
      return p;
    }
  }
  throw DecodeError("unknown kind");
}

void PushUndo(SessionState& s, const Position& p, int capacity) {
  if (capacity <= 0) return;
  s.undo_stack.push_back(p);
  while (s.undo_stack.size() > static_cast<size_t>(capacity)) {
    s.undo_stack.pop_front();
  }
}

void Arrive(SessionState& s, const std::string& pano_id, int64_t ts) {
  s.current_pano_id = pano_id;
  VisitRecord& v = s.visits[pano_id];
  if (v.count > 0) v.previous_visit_ms = v.last_visit_ms;
  ++v.count;
  v.last_visit_ms = ts;
}

bool ChangesState(EventKind k) {
  return k == EventKind::kPan || k == EventKind::kStep ||
         k == EventKind::kJump || k == EventKind::kTeleport ||
         k == EventKind::kGoBack;
}

}  // namespace

std::string EncodeEvent(const SessionEvent& event) {
  Json j = Json::object();
  j["v"] = kEventLogVersion;
  j["ts"] = event.ts_ms;
  j["kind"] = EventKindName(event.kind);
  j["payload"] = std::visit(PayloadEncoder{}, event.payload);
  return j.dump();
}

absl::StatusOr<SessionEvent> DecodeEvent(const std::string& line) {
  Json j = Json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  try {
    const double version = GetNumber(j, "v");
    if (version != kEventLogVersion) {
      return absl::InvalidArgumentError(
          absl::StrCat("unsupported event version ", version));
    }
    SessionEvent ev;
    const Json& ts = Get(j, "ts");
    if (!ts.is_number_integer()) throw DecodeError("'ts' not an integer");
    ev.ts_ms = ts.get<int64_t>();
    const std::string kind = GetString(j, "kind");
    auto k = EventKindFromName(kind);
    if (!k) throw DecodeError(absl::StrCat("unknown kind '", kind, "'"));
    ev.kind = *k;
    ev.payload = DecodePayload(ev.kind, Get(j, "payload"));
    return ev;
  } catch (const DecodeError& e) {
    return absl::InvalidArgumentError(e.what());
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(e.what());
  }
}

absl::StatusOr<std::vector<SessionEvent>> ParseEventLog(const std::string& text) {
  std::vector<SessionEvent> out;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == absl::string_view::npos) continue;
    auto ev = DecodeEvent(std::string(line));
    if (!ev.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", ev.status().message()));
    }
    out.push_back(*std::move(ev));
  }
  return out;
}

void ApplyEvent(SessionState& s, const SessionEvent& ev, int undo_capacity) {
  s.last_event_ms = std::max(s.last_event_ms, ev.ts_ms);
  if (const auto* p = std::get_if<PanPayload>(&ev.payload)) {
    s.heading = p->to;
  } else if (const auto* p = std::get_if<StepPayload>(&ev.payload)) {
    PushUndo(s, p->from, undo_capacity);
    Arrive(s, p->to_pano, ev.ts_ms);
  } else if (const auto* p = std::get_if<JumpPayload>(&ev.payload)) {
    PushUndo(s, p->from, undo_capacity);
    Arrive(s, p->to_pano, ev.ts_ms);
  } else if (const auto* p = std::get_if<TeleportPayload>(&ev.payload)) {
    if (p->from) PushUndo(s, *p->from, undo_capacity);
    s.heading = p->to.heading;
    s.selected_place = p->selected_place;
    Arrive(s, p->to.pano_id, ev.ts_ms);
  } else if (const auto* p = std::get_if<GoBackPayload>(&ev.payload)) {
    if (!s.undo_stack.empty()) s.undo_stack.pop_back();
    PushUndo(s, p->from, undo_capacity);
    s.heading = p->to.heading;
    Arrive(s, p->to.pano_id, ev.ts_ms);
  }
}

absl::StatusOr<SessionState> ReplayEvents(
    const std::vector<SessionEvent>& events, int undo_capacity) {
  SessionState state;
  bool started = false;
  for (size_t i = 0; i < events.size(); ++i) {
    const SessionEvent& ev = events[i];
    if (ev.ts_ms < state.last_event_ms) {
      return absl::InvalidArgumentError(
          absl::StrCat("event ", i, ": timestamp goes backwards"));
    }
    if (!started && ChangesState(ev.kind)) {
      const auto* t = std::get_if<TeleportPayload>(&ev.payload);
      if (t == nullptr || t->reason != kTeleportReasonStart) {
        return absl::InvalidArgumentError(
            absl::StrCat("event ", i, ": log does not begin with a start"));
      }
      started = true;
    }
    ApplyEvent(state, ev, undo_capacity);
  }
  if (!started) return absl::InvalidArgumentError("log has no start event");
  return state;
}

absl::Status MemoryLogStorage::WriteBatch(const std::vector<std::string>& lines) {
  std::lock_guard<std::mutex> lock(mu_);
  if (failures_left_ > 0) {
    --failures_left_;
    return absl::UnavailableError("injected storage failure");
  }
  lines_.insert(lines_.end(), lines.begin(), lines.end());
  ++batches_;
  return absl::OkStatus();
}

void MemoryLogStorage::FailNextWrites(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  failures_left_ = n;
}

std::vector<std::string> MemoryLogStorage::lines() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lines_;
}

int MemoryLogStorage::batches_written() const {
  std::lock_guard<std::mutex> lock(mu_);
  return batches_;
}

absl::Status FileLogStorage::WriteBatch(const std::vector<std::string>& lines) {
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path_));
  for (const std::string& line : lines) out << line << '\n';
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path_));
  return absl::OkStatus();
}

EventLog::EventLog(std::shared_ptr<LogStorage> storage, int batch_size)
    : storage_(std::move(storage)),
      batch_size_(static_cast<size_t>(std::max(1, batch_size))) {}

EventLog::~EventLog() { Close(); }

void EventLog::Append(const SessionEvent& event) {
  std::lock_guard<std::mutex> lock(mu_);
  events_.push_back(event);
  lines_.push_back(EncodeEvent(event));
  if (lines_.size() - flushed_ >= batch_size_) FlushLocked().IgnoreError();
}

absl::Status EventLog::Flush() {
  std::lock_guard<std::mutex> lock(mu_);
  return FlushLocked();
}

absl::Status EventLog::FlushLocked() {
  if (storage_ == nullptr || flushed_ == lines_.size()) {
    return absl::OkStatus();
  }
  std::vector<std::string> batch(lines_.begin() + flushed_, lines_.end());
  absl::Status s = storage_->WriteBatch(batch);
  if (!s.ok()) {
    warnings_.push_back(absl::StrCat("event log flush failed (", batch.size(),
                                     " records kept pending): ",
                                     s.message()));
    return s;
  }
  flushed_ = lines_.size();
  return absl::OkStatus();
}

void EventLog::Close() {
  std::lock_guard<std::mutex> lock(mu_);
  if (closed_) return;
  closed_ = true;
  FlushLocked().IgnoreError();
}

std::string EventLog::Export() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::string out;
  for (const std::string& line : lines_) absl::StrAppend(&out, line, "\n");
  return out;
}

std::vector<SessionEvent> EventLog::events() const {
  std::lock_guard<std::mutex> lock(mu_);
  return events_;
}

size_t EventLog::pending() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lines_.size() - flushed_;
}

size_t EventLog::flushed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return flushed_;
}

std::vector<std::string> EventLog::warnings() const {
  std::lock_guard<std::mutex> lock(mu_);
  return warnings_;
}

}  // namespace streetnav
