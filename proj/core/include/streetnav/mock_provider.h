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


#ifndef STREETNAV_MOCK_PROVIDER_H_
#define STREETNAV_MOCK_PROVIDER_H_

#include <string>
#include <utility>
#include <vector>

#include "streetnav/model_provider.h"
#include "streetnav/providers.h"

namespace streetnav {

// Utterance patterns (ECMAScript regex over normalized text) mapped to chat
// functions. Rules are tried in order; the first match wins.
struct MockCommandRule {
  std::string pattern;
  std::string function;
  std::string reply;
};

struct MockRuleTable {
  int version = 1;
  std::vector<MockCommandRule> commands;
  // Spoken phrase to annotation tag or place type, both normalized.
  std::vector<std::pair<std::string, std::string>> synonyms;
  std::vector<std::string> mobility_tags;
  std::vector<std::string> obstacle_tags;
};

const MockRuleTable& DefaultMockRules();
std::string MockRulesJson(const MockRuleTable& rules);

// Lowercase, punctuation to spaces, single spaces, each word singular.
std::string NormalizePhrase(const std::string& text);

// Splits on commas, "and", "then" and "and then".
std::vector<std::string> SplitUtterance(const std::string& utterance);

// Function names commanded by `utterance`, in spoken order.
std::vector<std::string> MatchCommands(const MockRuleTable& rules,
                                       const std::string& utterance);

// Deterministic stand-in for a multimodal model. It "sees" a view through
// `vision`: the tags of every octant of the panorama the view was taken
// from. Place knowledge comes only from the GeoContext JSON it is sent.
class MockModelProvider final : public ModelProvider {
 public:
  explicit MockModelProvider(const ImageryProvider* vision,
                             MockRuleTable rules = DefaultMockRules());

  absl::StatusOr<std::string> Describe(const DescribeRequest& req) override;
  absl::StatusOr<std::unique_ptr<ChatChannel>> OpenChat(
      const std::string& system_prompt,
      const std::vector<FunctionDeclaration>& declarations) override;

 private:
  const ImageryProvider* vision_;
  MockRuleTable rules_;
};

}  // namespace streetnav

#endif  // STREETNAV_MOCK_PROVIDER_H_
