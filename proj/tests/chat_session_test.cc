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

#include "gtest/gtest.h"
#include "streetnav/prompts.h"
#include "test_support.h"

namespace streetnav {
namespace {

using ::streetnav::testing::ScriptedModelProvider;

ViewCapture View(int i) {
  return ViewCapture{"p" + std::to_string(i), Heading::FromOctant(i % 8), 640,
                     640, ""};
}

GeoContext Ctx() {
  GeoContext c;
  c.closest_address = "Somewhere";
  return c;
}

TEST(ChatCommandTest, NamesRoundTrip) {
  for (ChatCommand c : AllChatCommands()) {
    EXPECT_EQ(ChatCommandFromName(ChatCommandName(c)), c);
  }
  EXPECT_FALSE(ChatCommandFromName("flyAway").has_value());
  std::vector<std::string> decls;
  for (const auto& d : ChatFunctionDeclarations()) decls.push_back(d.name);
  std::vector<std::string> names;
  for (ChatCommand c : AllChatCommands()) names.push_back(ChatCommandName(c));
  EXPECT_EQ(decls, names);
}

TEST(ChatSessionTest, TokenEstimator) {
  NavConfig cfg;
  EXPECT_EQ(EstimateTextTokens("", cfg), 0);
  EXPECT_EQ(EstimateTextTokens("abcd", cfg), 1);
  EXPECT_EQ(EstimateTextTokens("abcde", cfg), 2);
}

TEST(ChatSessionTest, EstimateGrowsByOracleUntilTrim) {
  ScriptedModelProvider p;
  NavConfig cfg;
  auto chat = ChatSession::Open(p, {}, cfg);
  ASSERT_TRUE(chat.ok());
  int64_t expected = (*chat)->fixed_tokens();
  const std::string json = GeoContextJson(Ctx());
  for (int i = 0; i < 20; ++i) {
    ASSERT_TRUE((*chat)->OnViewChange(View(i), Ctx()).ok());
    expected += 258 + (static_cast<int64_t>(json.size()) + 3) / 4;
    EXPECT_EQ((*chat)->token_estimate(), expected);
  }
  EXPECT_EQ(p.log->sent.size(), 20u);
  EXPECT_EQ((*chat)->view_history().size(), 20u);
}

TEST(ChatSessionTest, TrimKeepsRecentViewsAndFixedCost) {
  ScriptedModelProvider p;
  NavConfig cfg;
  const int64_t per_view =
      258 + (static_cast<int64_t>(GeoContextJson(Ctx()).size()) + 3) / 4;
  auto probe = ChatSession::Open(p, {}, cfg);
  ASSERT_TRUE(probe.ok());
  // Room for the fixed cost plus ten views.
  cfg.chat_token_budget = (*probe)->fixed_tokens() + 10 * per_view;
  auto chat = ChatSession::Open(p, {}, cfg);
  ASSERT_TRUE(chat.ok());
  for (int i = 0; i < 30; ++i) {
    ASSERT_TRUE((*chat)->OnViewChange(View(i), Ctx()).ok());
    EXPECT_LE((*chat)->token_estimate(), cfg.chat_token_budget);
    if (i % 3 == 0) ASSERT_TRUE((*chat)->Turn("Is there a bench?", ChatInputMode::kTyped).ok());
    EXPECT_LE((*chat)->token_estimate(), cfg.chat_token_budget);
    EXPECT_GE((*chat)->retained_views(), std::min(i + 1, 8));
  }
  EXPECT_GE((*chat)->token_estimate(), (*chat)->fixed_tokens());
  EXPECT_FALSE(p.log->evicted.empty());
  // Oldest first.
  EXPECT_TRUE(std::is_sorted(p.log->evicted.begin(), p.log->evicted.end()));
  EXPECT_FALSE((*chat)->system_prompt().empty());
  EXPECT_EQ((*chat)->view_history().size(), 30u);
}

TEST(ChatSessionTest, RejectsBudgetBelowFixedCost) {
  ScriptedModelProvider p;
  NavConfig cfg;
  cfg.chat_token_budget = 10;
  EXPECT_TRUE(absl::IsInvalidArgument(ChatSession::Open(p, {}, cfg).status()));
}

TEST(ChatSessionTest, ProviderUnavailable) {
  ScriptedModelProvider p;
  p.open_status = absl::UnavailableError("offline");
  EXPECT_TRUE(absl::IsUnavailable(ChatSession::Open(p, {}, {}).status()));
}

TEST(ChatSessionTest, UnknownFunctionsAreRejectedWithWarning) {
  ScriptedModelProvider p;
  p.chat_replies = {ModelReply{"Sure.", {{"turnAround"}, {"teleportHome"},
                                         {"moveForward"}}}};
  auto chat = ChatSession::Open(p, {}, {});
  ASSERT_TRUE(chat.ok());
  auto r = (*chat)->Turn("do things", ChatInputMode::kSpeech);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->reply, "Sure.");
  EXPECT_EQ(r->commands, (std::vector<ChatCommand>{ChatCommand::kTurnAround,
                                                   ChatCommand::kMoveForward}));
  ASSERT_EQ(r->warnings.size(), 1u);
  EXPECT_EQ(r->warnings[0], "unknown function \"teleportHome\" ignored");
}

TEST(ChatSessionTest, CloseIsIdempotent) {
  ScriptedModelProvider p;
  auto chat = ChatSession::Open(p, {}, {});
  ASSERT_TRUE(chat.ok());
  (*chat)->Close();
  (*chat)->Close();
  EXPECT_TRUE((*chat)->closed());
  EXPECT_EQ(p.log->closes, 1);
  EXPECT_FALSE((*chat)->Turn("hi", ChatInputMode::kTyped).ok());
  EXPECT_FALSE((*chat)->OnViewChange(View(0), Ctx()).ok());
  chat->reset();
  EXPECT_EQ(p.log->closes, 1);
}

}  // namespace
}  // namespace streetnav
