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


#include "streetnav/navigator.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "streetnav/message_catalog.h"

namespace streetnav {

namespace {

NotePayload Fields(
    std::initializer_list<std::pair<std::string, std::string>> fields) {
  NotePayload note;
  note.fields.assign(fields.begin(), fields.end());
  return note;
}

ActionOutput One(StatusMessage m) {
  ActionOutput out;
  out.messages.push_back(std::move(m));
  return out;
}

}  // namespace

const char* InfoKindName(InfoKind k) {
  switch (k) {
    case InfoKind::kWhere:
      return "where";
    case InfoKind::kNearby:
      return "nearby";
    case InfoKind::kIntersections:
      return "intersections";
    case InfoKind::kMovements:
      return "movements";
    case InfoKind::kVisits:
      return "visits";
    case InfoKind::kPhoto:
      return "photo";
  }
  return "where";
}

std::optional<InfoKind> InfoKindFromName(const std::string& name) {
  for (InfoKind k : {InfoKind::kWhere, InfoKind::kNearby,
                     InfoKind::kIntersections, InfoKind::kMovements,
                     InfoKind::kVisits, InfoKind::kPhoto}) {
    if (name == InfoKindName(k)) return k;
  }
  return std::nullopt;
}

Navigator::Navigator(const MapServices& services, const NavConfig& cfg,
                     const Clock* clock, NavigatorOptions options)
    : services_(services), cfg_(cfg), clock_(clock),
      options_(std::move(options)) {}

absl::StatusOr<std::unique_ptr<Navigator>> Navigator::Start(
    const MapServices& services, const NavConfig& cfg,
    const std::string& start_pano_id, Heading heading, const Clock* clock,
    EventSink* sink, NavigatorOptions options) {
  auto session =
      Session::Start(services, cfg, start_pano_id, heading, clock, sink);
  if (!session.ok()) return session.status();
  std::unique_ptr<Navigator> nav(
      new Navigator(services, cfg, clock, std::move(options)));
  nav->session_ = *std::move(session);
  return nav;
}

absl::StatusOr<LocalContext> Navigator::Context() const {
  auto pano = session_->CurrentPano();
  if (!pano.ok()) return pano.status();
  return BuildLocalContext(services_, *pano, session_->state().heading, cfg_);
}

absl::StatusOr<ViewCapture> Navigator::CurrentView() const {
  const SessionState& st = session_->state();
  ViewCapture v;
  v.pano_id = st.current_pano_id;
  v.heading = st.heading;
  v.width = v.height = cfg_.capture_size_px;
  auto d = services_.imagery->GetView(st.current_pano_id,
                                      st.heading.NearestOctant());
  if (!d.ok()) return d.status();
  v.image_ref = d->image_ref;
  return v;
}

absl::Status Navigator::PushViewToChat() {
  if (chat_ == nullptr) return absl::OkStatus();
  auto view = CurrentView();
  if (!view.ok()) return view.status();
  auto ctx = AssembleGeoContext(session_->state(), services_, cfg_);
  if (!ctx.ok()) return ctx.status();
  if (auto s = chat_->OnViewChange(*view, *ctx); !s.ok()) {
    // The chat falls behind; navigation carries on.
    session_->Note(EventKind::kChatTurn,
                   Fields({{"action", "view_failed"},
                           {"error", std::string(s.message())}}));
  }
  return absl::OkStatus();
}

ActionOutput Navigator::Done(ActionOutput out) {
  if (!out.messages.empty()) last_ = out.messages.back();
  return out;
}

ActionOutput Navigator::Say(StatusMessage m) { return Done(One(std::move(m))); }

absl::StatusOr<ActionOutput> Navigator::Pan(PanDirection direction) {
  const PanOutcome outcome = session_->Pan(direction);
  if (auto s = PushViewToChat(); !s.ok()) return s;
  auto graph = session_->CurrentGraph();
  if (!graph.ok()) return graph.status();
  auto ctx = Context();
  if (!ctx.ok()) return ctx.status();
  return Say(PanAnnouncement(outcome, *graph, *ctx, services_, cfg_));
}

absl::StatusOr<ActionOutput> Navigator::Move(MoveKind kind,
                                             StepDirection direction) {
  auto prev = Context();
  if (!prev.ok()) return prev.status();
  absl::StatusOr<MoveOutcome> outcome =
      kind == MoveKind::kStep   ? session_->Step(direction)
      : kind == MoveKind::kJump ? session_->Jump()
                                : session_->GoBack();
  if (!outcome.ok()) return outcome.status();
  if (!outcome->moved) {
    if (kind == MoveKind::kGoBack) {
      return Say(PlainMessage(RenderMessage("move.nothing_to_undo"),
                              VoiceChannel::kStatus, FragmentType::kMovement));
    }
    auto graph = session_->CurrentGraph();
    if (!graph.ok()) return graph.status();
    return Say(AvailableMovementsAnnouncement(
        *graph, session_->state().heading,
        direction == StepDirection::kForward ? "forward" : "backward", cfg_));
  }
  if (auto s = PushViewToChat(); !s.ok()) return s;
  auto next = Context();
  if (!next.ok()) return next.status();
  return Say(MovementAnnouncement(*prev, *next, *outcome, cfg_));
}

absl::StatusOr<ActionOutput> Navigator::Step(StepDirection direction) {
  return Move(MoveKind::kStep, direction);
}

absl::StatusOr<ActionOutput> Navigator::Jump() {
  return Move(MoveKind::kJump, StepDirection::kForward);
}

absl::StatusOr<ActionOutput> Navigator::GoBack() {
  return Move(MoveKind::kGoBack, StepDirection::kBackward);
}

absl::StatusOr<ActionOutput> Navigator::Teleport(const std::string& query) {
  auto outcome = session_->Teleport(query);
  if (!outcome.ok()) {
    if (absl::IsNotFound(outcome.status()) ||
        absl::IsFailedPrecondition(outcome.status())) {
      session_->Note(EventKind::kHotkey,
                     Fields({{"action", "teleport"},
                             {"query", query},
                             {"result", "not_found"}}));
      return Say(PlainMessage(std::string(outcome.status().message())));
    }
    return outcome.status();
  }
  if (auto s = PushViewToChat(); !s.ok()) return s;
  auto graph = session_->CurrentGraph();
  if (!graph.ok()) return graph.status();
  auto ctx = Context();
  if (!ctx.ok()) return ctx.status();
  return Say(TeleportAnnouncement(*outcome, *ctx,
                                  AvailableMovements(*graph, cfg_), cfg_));
}

absl::StatusOr<ActionOutput> Navigator::Info(InfoKind kind) {
  session_->Note(EventKind::kHotkey,
                 Fields({{"action", "info"}, {"kind", InfoKindName(kind)}}));
  auto pano = session_->CurrentPano();
  if (!pano.ok()) return pano.status();
  const Heading heading = session_->state().heading;
  switch (kind) {
    case InfoKind::kWhere:
    case InfoKind::kNearby:
    case InfoKind::kIntersections: {
      auto ctx = Context();
      if (!ctx.ok()) return ctx.status();
      if (kind == InfoKind::kWhere) return Say(WhereAmIAnnouncement(*ctx));
      if (kind == InfoKind::kNearby) {
        return Say(NearbyPlacesAnnouncement(*ctx, cfg_));
      }
      auto m = IntersectionAnnouncement(*ctx, services_, pano->location, cfg_);
      if (!m.ok()) return m.status();
      return Say(*std::move(m));
    }
    case InfoKind::kMovements: {
      auto graph = session_->CurrentGraph();
      if (!graph.ok()) return graph.status();
      return Say(
          AvailableMovementsAnnouncement(*graph, heading, std::nullopt, cfg_));
    }
    case InfoKind::kVisits:
      return Say(VisitAnnouncement(session_->VisitInfo(), clock_->NowMs()));
    case InfoKind::kPhoto:
      return Say(PanoMetadataAnnouncement(*pano));
  }
  return absl::InvalidArgumentError("unknown info kind");
}

absl::StatusOr<ActionOutput> Navigator::Describe(DescriberMode mode,
                                                 bool structured) {
  if (options_.model == nullptr) {
    return Say(PlainMessage(RenderMessage("describe.unavailable")));
  }
  auto view = CurrentView();
  if (!view.ok()) return view.status();
  auto ctx = AssembleGeoContext(session_->state(), services_, cfg_);
  if (!ctx.ok()) return ctx.status();
  auto result = DescribeView(*options_.model, *view, *ctx, options_.profile,
                             mode, structured);
  NotePayload note = Fields({{"action", "describe"},
                             {"mode", DescriberModeName(mode)},
                             {"structured", structured ? "true" : "false"}});
  if (!result.ok()) {
    note.fields.emplace_back("error", std::string(result.status().message()));
    session_->Note(EventKind::kDescribe, std::move(note));
    return Say(PlainMessage(RenderMessage("describe.failed"),
                            VoiceChannel::kChat));
  }
  note.fields.emplace_back("description", result->description);
  session_->Note(EventKind::kDescribe, std::move(note));
  ActionOutput out =
      One(PlainMessage(result->description, VoiceChannel::kChat));
  if (result->structured.has_value()) out.followups = result->structured->followups;
  return Done(std::move(out));
}

absl::StatusOr<ActionOutput> Navigator::ChatOpen() {
  if (options_.model == nullptr) {
    return Say(PlainMessage(RenderMessage("chat.unavailable")));
  }
  if (chat_ != nullptr) {
    return Say(PlainMessage(RenderMessage("chat.already_open")));
  }
  auto chat = ChatSession::Open(*options_.model, options_.profile, cfg_);
  if (!chat.ok()) {
    session_->Note(EventKind::kChatTurn,
                   Fields({{"action", "open_failed"},
                           {"error", std::string(chat.status().message())}}));
    return Say(PlainMessage(RenderMessage("chat.unavailable")));
  }
  chat_ = *std::move(chat);
  session_->Note(EventKind::kChatTurn, Fields({{"action", "open"}}));
  if (auto s = PushViewToChat(); !s.ok()) return s;
  return Say(PlainMessage(RenderMessage("chat.opened")));
}

absl::StatusOr<ActionOutput> Navigator::ChatTurn(const std::string& input,
                                                 ChatInputMode mode) {
  ActionOutput out;
  if (chat_ == nullptr) {
    auto opened = ChatOpen();
    if (!opened.ok()) return opened.status();
    out = *std::move(opened);
    if (chat_ == nullptr) return Done(std::move(out));
  }
  auto turn = chat_->Turn(input, mode);
  if (!turn.ok()) {
    session_->Note(EventKind::kChatTurn,
                   Fields({{"action", "turn"},
                           {"mode", ChatInputModeName(mode)},
                           {"input", input},
                           {"error", std::string(turn.status().message())}}));
    out.messages.push_back(
        PlainMessage(RenderMessage("chat.failed"), VoiceChannel::kChat));
    return Done(std::move(out));
  }
  std::vector<std::string> names;
  for (ChatCommand c : turn->commands) names.push_back(ChatCommandName(c));
  NotePayload note = Fields({{"action", "turn"},
                             {"mode", ChatInputModeName(mode)},
                             {"input", input},
                             {"reply", turn->reply},
                             {"commands", absl::StrJoin(names, ",")}});
  if (!turn->warnings.empty()) {
    note.fields.emplace_back("warnings", absl::StrJoin(turn->warnings, "; "));
  }
  session_->Note(EventKind::kChatTurn, std::move(note));
  if (!turn->reply.empty()) {
    out.messages.push_back(PlainMessage(turn->reply, VoiceChannel::kChat));
  }
  for (ChatCommand c : turn->commands) {
    auto effect = Dispatch(c);
    if (!effect.ok()) return effect.status();
    for (StatusMessage& m : effect->messages) out.messages.push_back(std::move(m));
  }
  return Done(std::move(out));
}

absl::StatusOr<ActionOutput> Navigator::ChatClose() {
  if (chat_ == nullptr) {
    return Say(PlainMessage(RenderMessage("chat.not_open")));
  }
  int turns = 0;
  for (const TranscriptEntry& e : chat_->transcript()) {
    if (e.role == ChatRole::kUser) ++turns;
  }
  chat_->Close();
  session_->Note(EventKind::kChatTurn,
                 Fields({{"action", "close"}, {"turns", absl::StrCat(turns)}}));
  chat_.reset();
  return Say(PlainMessage(RenderMessage("chat.closed")));
}

ActionOutput Navigator::Repeat() {
  if (last_.has_value()) return One(*last_);
  return One(PlainMessage(RenderMessage("repeat.empty")));
}

ActionOutput Navigator::StopSpeech() {
  ActionOutput out;
  out.stop_speech = true;
  return out;
}

absl::StatusOr<ActionOutput> Navigator::Dispatch(ChatCommand command) {
  auto turn = [this](PanDirection d,
                     double degrees) -> absl::StatusOr<ActionOutput> {
    const int pans =
        static_cast<int>(std::lround(degrees / cfg_.pan_increment_deg));
    for (int i = 1; i < pans; ++i) {
      session_->Pan(d);
      if (auto s = PushViewToChat(); !s.ok()) return s;
    }
    return Pan(d);
  };
  switch (command) {
    case ChatCommand::kMoveForward:
      return Step(StepDirection::kForward);
    case ChatCommand::kMoveBackward:
      return Step(StepDirection::kBackward);
    case ChatCommand::kMoveToIntersection:
      return Jump();
    case ChatCommand::kTurnLeft45:
      return turn(PanDirection::kLeft, 45.0);
    case ChatCommand::kTurnLeft90:
      return turn(PanDirection::kLeft, 90.0);
    case ChatCommand::kTurnRight45:
      return turn(PanDirection::kRight, 45.0);
    case ChatCommand::kTurnRight90:
      return turn(PanDirection::kRight, 90.0);
    case ChatCommand::kTurnAround:
      return turn(PanDirection::kRight, 180.0);
  }
  return absl::InvalidArgumentError("unknown chat command");
}

}  // namespace streetnav
