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


#ifndef STREETNAV_MESSAGE_CATALOG_H_
#define STREETNAV_MESSAGE_CATALOG_H_

#include <string>
#include <utility>
#include <vector>

namespace streetnav {

// Every user-facing template, keyed by a stable id. Placeholders are
// written {name}.
struct MessageTemplate {
  const char* id;
  const char* pattern;
};

const std::vector<MessageTemplate>& MessageCatalog();

using MessageArgs = std::vector<std::pair<std::string, std::string>>;

// Substitutes `args` into the template `id`. Unknown ids and placeholders
// left unfilled are programming errors and abort in debug builds.
std::string RenderMessage(const std::string& id, const MessageArgs& args = {});

// Markdown table of the catalog, as checked in under docs/messages.md.
std::string MessageCatalogMarkdown();

}  // namespace streetnav

#endif  // STREETNAV_MESSAGE_CATALOG_H_
