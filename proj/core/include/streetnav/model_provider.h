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


#ifndef STREETNAV_MODEL_PROVIDER_H_
#define STREETNAV_MODEL_PROVIDER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "streetnav/prompts.h"
#include "streetnav/world_types.h"

namespace streetnav {

// Interface to a multimodal model. A live adapter wraps a hosted model and
// its streaming chat API; MockModelProvider answers from fixture
// annotations. Errors are reported as Status; Unavailable and
// DeadlineExceeded mean "try later".

// One item of chat context: an image with its GeoContext JSON, or text.
struct ContextPart {
  uint64_t id = 0;
  std::optional<ViewCapture> view;
  std::string text;
};

struct FunctionCall {
  std::string name;
};

struct ModelReply {
  std::string text;
  std::vector<FunctionCall> calls;
};

struct DescribeRequest {
  PromptDocument prompt;
  ViewCapture view;
  DescriberMode mode = DescriberMode::kDefault;
  bool structured = false;
};

// A persistent conversation. Calls are issued in order by one owner.
class ChatChannel {
 public:
  virtual ~ChatChannel() = default;
  virtual absl::Status Send(const std::vector<ContextPart>& parts) = 0;
  virtual absl::StatusOr<ModelReply> Turn(const std::string& input) = 0;
  // The owner dropped `part_id` from its context budget.
  virtual void Evict(uint64_t part_id) { (void)part_id; }
  virtual void Close() = 0;
};

class ModelProvider {
 public:
  virtual ~ModelProvider() = default;

  // Raw model text; for structured requests this should be a JSON object.
  virtual absl::StatusOr<std::string> Describe(const DescribeRequest& req) = 0;

  virtual absl::StatusOr<std::unique_ptr<ChatChannel>> OpenChat(
      const std::string& system_prompt,
      const std::vector<FunctionDeclaration>& declarations) = 0;
};

}  // namespace streetnav

#endif  // STREETNAV_MODEL_PROVIDER_H_
