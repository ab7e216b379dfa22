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


#include "streetnav/chat_session.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "streetnav/prompts.h"

namespace streetnav {

const std::array<ChatCommand, 8>& AllChatCommands() {
  static const std::array<ChatCommand, 8> kAll = {
      ChatCommand::kMoveBackward, ChatCommand::kMoveForward,
      ChatCommand::kMoveToIntersection, ChatCommand::kTurnLeft45,
      ChatCommand::kTurnLeft90, ChatCommand::kTurnRight45,
      ChatCommand::kTurnRight90, ChatCommand::kTurnAround};
  return kAll;
}

const char* ChatCommandName(ChatCommand c) {
  switch (c) {
    case ChatCommand::kMoveBackward:
      return "moveBackward";
    case ChatCommand::kMoveForward:
      return "moveForward";
    case ChatCommand::kMoveToIntersection:
      return "moveToIntersection";
    case ChatCommand::kTurnLeft45:
      return "turnLeft45";
    case ChatCommand::kTurnLeft90:
      return "turnLeft90";
    case ChatCommand::kTurnRight45:
      return "turnRight45";
    case ChatCommand::kTurnRight90:
      return "turnRight90";
    case ChatCommand::kTurnAround:
      return "turnAround";
  }
  return "turnAround";
}

std::optional<ChatCommand> ChatCommandFromName(const std::string& name) {
  for (ChatCommand c : AllChatCommands()) {
    if (name == ChatCommandName(c)) return c;
  }
  return std::nullopt;
}

const char* ChatInputModeName(ChatInputMode m) {
  return m == ChatInputMode::kTyped ? "typed" : "speech";
}

const char* ChatRoleName(ChatRole r) {
  switch (r) {
    case ChatRole::kUser:
      return "user";
    case ChatRole::kAssistant:
      return "assistant";
    case ChatRole::kFunctionCall:
      return "function_call";
    case ChatRole::kView:
      return "view";
  }
  return "user";
}

int64_t EstimateTextTokens(const std::string& text, const NavConfig& cfg) {
  const int64_t n = static_cast<int64_t>(text.size());
  return (n + cfg.chars_per_token - 1) / cfg.chars_per_token;
}

absl::StatusOr<std::unique_ptr<ChatSession>> ChatSession::Open(
    ModelProvider& provider, const UserProfile& profile,
    const NavConfig& cfg) {
  if (auto s = cfg.Validate(); !s.ok()) return s;
  std::string system = RenderChatSystemPrompt(profile);
  const auto& decls = ChatFunctionDeclarations();
  int64_t fixed = EstimateTextTokens(system, cfg);
  for (const FunctionDeclaration& d : decls) {
    fixed += EstimateTextTokens(d.name, cfg) +
             EstimateTextTokens(d.description, cfg);
  }
  if (fixed > cfg.chat_token_budget) {
    return absl::InvalidArgumentError(
        absl::StrCat("chat_token_budget ", cfg.chat_token_budget,
                     " is below the fixed prompt cost of ", fixed));
  }
  auto channel = provider.OpenChat(system, decls);
  if (!channel.ok()) return channel.status();
  return std::unique_ptr<ChatSession>(
      new ChatSession(*std::move(channel), std::move(system), cfg, fixed));
}

ChatSession::ChatSession(std::unique_ptr<ChatChannel> channel,
                         std::string system_prompt, const NavConfig& cfg,
                         int64_t fixed_tokens)
    : channel_(std::move(channel)),
      system_prompt_(std::move(system_prompt)),
      cfg_(cfg),
      fixed_tokens_(fixed_tokens),
      token_estimate_(fixed_tokens) {}

ChatSession::~ChatSession() { Close(); }

int ChatSession::retained_views() const {
  return static_cast<int>(std::count_if(
      context_.begin(), context_.end(), [](const Entry& e) { return e.is_view; }));
}

void ChatSession::Add(bool is_view, int64_t tokens, uint64_t id) {
  context_.push_back(Entry{id, is_view, tokens});
  token_estimate_ += tokens;
  Trim();
}

void ChatSession::Trim() {
  while (token_estimate_ > cfg_.chat_token_budget && !context_.empty()) {
    // Views newer than this index are protected.
    int views_seen = 0;
    size_t protect_from = context_.size();
    for (size_t i = context_.size(); i-- > 0;) {
      if (!context_[i].is_view) continue;
      if (++views_seen > cfg_.min_retained_views) break;
      protect_from = i;
    }
    size_t victim = context_.size();
    for (size_t i = 0; i < context_.size(); ++i) {
      const bool protected_view = context_[i].is_view && i >= protect_from;
      if (!protected_view) {
        victim = i;
        break;
      }
    }
    // Only protected views remain: the budget wins.
    if (victim == context_.size()) victim = 0;
    token_estimate_ -= context_[victim].tokens;
    channel_->Evict(context_[victim].id);
    context_.erase(context_.begin() + static_cast<std::ptrdiff_t>(victim));
  }
}

absl::Status ChatSession::OnViewChange(const ViewCapture& view,
                                       const GeoContext& ctx) {
  if (closed_) return absl::FailedPreconditionError("chat is closed");
  ContextPart part{next_id_++, view, GeoContextJson(ctx)};
  if (auto s = channel_->Send({part}); !s.ok()) return s;
  views_.push_back(view);
  transcript_.push_back(TranscriptEntry{
      ChatRole::kView, absl::StrCat(view.pano_id, " ", view.heading.degrees())});
  Add(true, cfg_.tokens_per_image + EstimateTextTokens(part.text, cfg_),
      part.id);
  return absl::OkStatus();
}

absl::StatusOr<ChatTurnResult> ChatSession::Turn(const std::string& input,
                                                 ChatInputMode mode) {
  (void)mode;
  if (closed_) return absl::FailedPreconditionError("chat is closed");
  auto reply = channel_->Turn(input);
  if (!reply.ok()) return reply.status();
  ChatTurnResult out;
  out.reply = reply->text;
  transcript_.push_back(TranscriptEntry{ChatRole::kUser, input});
  transcript_.push_back(TranscriptEntry{ChatRole::kAssistant, reply->text});
  std::vector<std::string> names;
  for (const FunctionCall& call : reply->calls) {
    names.push_back(call.name);
    if (auto c = ChatCommandFromName(call.name); c.has_value()) {
      out.commands.push_back(*c);
      transcript_.push_back(TranscriptEntry{ChatRole::kFunctionCall, call.name});
    } else {
      out.warnings.push_back(
          absl::StrCat("unknown function \"", call.name, "\" ignored"));
    }
  }
  Add(false,
      EstimateTextTokens(input, cfg_) + EstimateTextTokens(reply->text, cfg_) +
          EstimateTextTokens(absl::StrJoin(names, ","), cfg_),
      next_id_++);
  return out;
}

void ChatSession::Close() {
  if (closed_) return;
  closed_ = true;
  channel_->Close();
}

}  // namespace streetnav
