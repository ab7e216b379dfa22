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


#ifndef STREETNAV_PROMPTS_H_
#define STREETNAV_PROMPTS_H_

#include <string>
#include <vector>

#include "streetnav/geo_context.h"

namespace streetnav {

enum class DescriberMode { kDefault, kTourGuide };
const char* DescriberModeName(DescriberMode m);

// A function the chat model may call. Names match ChatCommand.
struct FunctionDeclaration {
  std::string name;
  std::string description;
};

const std::vector<FunctionDeclaration>& ChatFunctionDeclarations();

struct PromptDocument {
  std::string system;
  // The GeoContext as JSON; sent next to the image.
  std::string context;
};

// Byte-identical output for identical inputs. `structured` appends the JSON
// response schema.
PromptDocument RenderDescriberPrompt(const GeoContext& ctx,
                                     const UserProfile& profile,
                                     DescriberMode mode, bool structured);

std::string RenderChatSystemPrompt(const UserProfile& profile);

}  // namespace streetnav

#endif  // STREETNAV_PROMPTS_H_
