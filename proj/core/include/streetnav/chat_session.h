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


#ifndef STREETNAV_CHAT_SESSION_H_
#define STREETNAV_CHAT_SESSION_H_

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "streetnav/geo_context.h"
#include "streetnav/model_provider.h"
#include "streetnav/nav_config.h"

namespace streetnav {

// The functions declared to the chat model.
enum class ChatCommand {
  kMoveBackward,
  kMoveForward,
  kMoveToIntersection,
  kTurnLeft45,
  kTurnLeft90,
  kTurnRight45,
  kTurnRight90,
  kTurnAround,
};

const std::array<ChatCommand, 8>& AllChatCommands();
const char* ChatCommandName(ChatCommand c);
std::optional<ChatCommand> ChatCommandFromName(const std::string& name);

enum class ChatInputMode { kTyped, kSpeech };
const char* ChatInputModeName(ChatInputMode m);

enum class ChatRole { kUser, kAssistant, kFunctionCall, kView };
const char* ChatRoleName(ChatRole r);

struct TranscriptEntry {
  ChatRole role = ChatRole::kUser;
  std::string text;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) =
      default;
};

struct ChatTurnResult {
  std::string reply;
  std::vector<ChatCommand> commands;  // in call order
  // One per rejected function call.
  std::vector<std::string> warnings;
};

// ceil(chars / chars_per_token).
int64_t EstimateTextTokens(const std::string& text, const NavConfig& cfg);

// One open conversation with the chat model. The system prompt and function
// declarations are a fixed cost that is never trimmed. Views and turns are
// trimmed oldest first once the estimate exceeds the budget, skipping the
// newest min_retained_views views for as long as anything else can go.
class ChatSession {
 public:
  // Fails when the provider cannot open a chat or the fixed cost alone
  // exceeds the budget.
  static absl::StatusOr<std::unique_ptr<ChatSession>> Open(
      ModelProvider& provider, const UserProfile& profile,
      const NavConfig& cfg);

  ~ChatSession();

  absl::Status OnViewChange(const ViewCapture& view, const GeoContext& ctx);
  absl::StatusOr<ChatTurnResult> Turn(const std::string& input,
                                      ChatInputMode mode);
  // Idempotent.
  void Close();

  bool closed() const { return closed_; }
  const std::string& system_prompt() const { return system_prompt_; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  // Every view sent since Open, oldest first, including trimmed ones.
  const std::vector<ViewCapture>& view_history() const { return views_; }
  int64_t token_estimate() const { return token_estimate_; }
  int64_t fixed_tokens() const { return fixed_tokens_; }
  int retained_views() const;
  int retained_entries() const { return static_cast<int>(context_.size()); }

 private:
  struct Entry {
    uint64_t id = 0;
    bool is_view = false;
    int64_t tokens = 0;
  };

  ChatSession(std::unique_ptr<ChatChannel> channel, std::string system_prompt,
              const NavConfig& cfg, int64_t fixed_tokens);

  void Add(bool is_view, int64_t tokens, uint64_t id);
  void Trim();

  std::unique_ptr<ChatChannel> channel_;
  std::string system_prompt_;
  NavConfig cfg_;
  int64_t fixed_tokens_;
  int64_t token_estimate_;
  uint64_t next_id_ = 1;
  std::deque<Entry> context_;
  std::vector<TranscriptEntry> transcript_;
  std::vector<ViewCapture> views_;
  bool closed_ = false;
};

}  // namespace streetnav

#endif  // STREETNAV_CHAT_SESSION_H_
