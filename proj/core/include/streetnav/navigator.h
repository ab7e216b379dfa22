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


#ifndef STREETNAV_NAVIGATOR_H_
#define STREETNAV_NAVIGATOR_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/announcer.h"
#include "streetnav/chat_session.h"
#include "streetnav/describer.h"
#include "streetnav/geo_context.h"
#include "streetnav/model_provider.h"
#include "streetnav/session.h"

namespace streetnav {

enum class InfoKind {
  kWhere,
  kNearby,
  kIntersections,
  kMovements,
  kVisits,
  kPhoto,
};
const char* InfoKindName(InfoKind k);
std::optional<InfoKind> InfoKindFromName(const std::string& name);

struct NavigatorOptions {
  UserProfile profile;
  // Null disables description and chat; navigation is unaffected.
  ModelProvider* model = nullptr;
};

struct ActionOutput {
  std::vector<StatusMessage> messages;
  // Suggested questions from a structured description.
  std::vector<std::string> followups;
  bool stop_speech = false;
};

// A session plus everything that speaks: announcements, descriptions and the
// chat agent. Each call is one user action. Not internally synchronized.
class Navigator {
 public:
  static absl::StatusOr<std::unique_ptr<Navigator>> Start(
      const MapServices& services, const NavConfig& cfg,
      const std::string& start_pano_id, Heading heading, const Clock* clock,
      EventSink* sink, NavigatorOptions options);

  Session& session() { return *session_; }
  const Session& session() const { return *session_; }
  // Null unless a chat is open.
  const ChatSession* chat() const { return chat_.get(); }

  absl::StatusOr<ActionOutput> Pan(PanDirection direction);
  absl::StatusOr<ActionOutput> Step(StepDirection direction);
  absl::StatusOr<ActionOutput> Jump();
  absl::StatusOr<ActionOutput> Teleport(const std::string& query);
  absl::StatusOr<ActionOutput> GoBack();
  absl::StatusOr<ActionOutput> Info(InfoKind kind);
  absl::StatusOr<ActionOutput> Describe(DescriberMode mode, bool structured);
  absl::StatusOr<ActionOutput> ChatOpen();
  // Opens the chat first when needed.
  absl::StatusOr<ActionOutput> ChatTurn(const std::string& input,
                                        ChatInputMode mode);
  absl::StatusOr<ActionOutput> ChatClose();
  ActionOutput Repeat();
  ActionOutput StopSpeech();

  // Same session effect and announcement as the equivalent hotkeys. Turns
  // of more than 45 degrees are composed of pans; only the last is
  // announced.
  absl::StatusOr<ActionOutput> Dispatch(ChatCommand command);

  const std::optional<StatusMessage>& last_message() const { return last_; }

 private:
  Navigator(const MapServices& services, const NavConfig& cfg,
            const Clock* clock, NavigatorOptions options);

  absl::StatusOr<LocalContext> Context() const;
  absl::StatusOr<ViewCapture> CurrentView() const;
  absl::Status PushViewToChat();
  absl::StatusOr<ActionOutput> Move(MoveKind kind, StepDirection direction);
  ActionOutput Done(ActionOutput out);
  ActionOutput Say(StatusMessage m);

  MapServices services_;
  NavConfig cfg_;
  const Clock* clock_;
  NavigatorOptions options_;
  std::unique_ptr<Session> session_;
  std::unique_ptr<ChatSession> chat_;
  std::optional<StatusMessage> last_;
};

}  // namespace streetnav

#endif  // STREETNAV_NAVIGATOR_H_
