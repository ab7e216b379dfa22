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


#ifndef STREETNAV_GATEWAY_ACTIONS_H_
#define STREETNAV_GATEWAY_ACTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/chat_session.h"
#include "streetnav/navigator.h"
#include "streetnav/prompts.h"
#include "streetnav/session_types.h"

namespace streetnav::gateway {

inline constexpr int kApiVersion = 1;

enum class ActionKind {
  kPan,
  kStep,
  kJump,
  kTeleport,
  kBack,
  kDescribe,
  kChatOpen,
  kChatTurn,
  kChatClose,
  kInfo,
  kRepeat,
  kStopSpeech,
};

// Wire names: "pan", "step", "jump", "teleport", "back", "describe",
// "chat_open", "chat_turn", "chat_close", "info", "repeat", "stop_speech".
const char* ActionKindName(ActionKind k);
std::optional<ActionKind> ActionKindFromName(const std::string& name);
const std::vector<ActionKind>& AllActionKinds();

// Only the fields of the chosen action are meaningful.
struct ActionRequest {
  ActionKind action = ActionKind::kRepeat;
  PanDirection pan = PanDirection::kRight;
  StepDirection step = StepDirection::kForward;
  std::string query;  // teleport
  DescriberMode mode = DescriberMode::kDefault;
  bool structured = false;
  std::string input;  // chat_turn
  ChatInputMode input_mode = ChatInputMode::kTyped;
  InfoKind info = InfoKind::kWhere;

  friend bool operator==(const ActionRequest&, const ActionRequest&) = default;
};

// {"v":1,"action":"pan","direction":"left"}. Missing optional fields take
// their defaults; unknown fields, wrong types and out-of-set values are
// InvalidArgument.
absl::StatusOr<ActionRequest> ParseActionRequest(const std::string& json);
// Canonical encoding: only the fields the action uses.
std::string ActionRequestJson(const ActionRequest& req);

ActionRequest PanRequest(PanDirection d);
ActionRequest StepRequest(StepDirection d);
ActionRequest InfoRequest(InfoKind k);

}  // namespace streetnav::gateway

#endif  // STREETNAV_GATEWAY_ACTIONS_H_
