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


#include "streetnav/describer.h"

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace streetnav {

namespace {

using Json = nlohmann::json;

absl::StatusOr<std::vector<std::string>> StringList(const Json& j,
                                                    const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(key, ": expected an array of strings"));
  }
  std::vector<std::string> out;
  for (const Json& e : *it) {
    if (!e.is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat(key, ": expected an array of strings"));
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

absl::StatusOr<std::string> NonEmptyString(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string() ||
      absl::StripAsciiWhitespace(it->get<std::string>()).empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(key, ": expected a non-empty string"));
  }
  return it->get<std::string>();
}

}  // namespace

absl::StatusOr<DescriberResult> ParseStructuredDescription(
    const std::string& raw) {
  Json j = Json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("response is not a JSON object");
  }
  DescriberResult r;
  auto description = NonEmptyString(j, "description");
  if (!description.ok()) return description.status();
  r.description = *std::move(description);
  StructuredDescription s;
  auto mobility = StringList(j, "mobility_features");
  if (!mobility.ok()) return mobility.status();
  s.mobility_features = *std::move(mobility);
  auto obstacles = StringList(j, "obstacles");
  if (!obstacles.ok()) return obstacles.status();
  s.obstacles = *std::move(obstacles);
  auto safety = NonEmptyString(j, "safety_summary");
  if (!safety.ok()) return safety.status();
  s.safety_summary = *std::move(safety);
  auto followups = StringList(j, "followups");
  if (!followups.ok()) return followups.status();
  if (followups->size() != kFollowupCount) {
    return absl::InvalidArgumentError(
        absl::StrCat("followups: expected ", kFollowupCount, " questions, got ",
                     followups->size()));
  }
  s.followups = *std::move(followups);
  r.structured = std::move(s);
  return r;
}

absl::StatusOr<DescriberResult> DescribeView(ModelProvider& provider,
                                             const ViewCapture& view,
                                             const GeoContext& ctx,
                                             const UserProfile& profile,
                                             DescriberMode mode,
                                             bool structured) {
  DescribeRequest req{RenderDescriberPrompt(ctx, profile, mode, structured),
                      view, mode, structured};
  if (!structured) {
    auto text = provider.Describe(req);
    if (!text.ok()) return text.status();
    if (absl::StripAsciiWhitespace(*text).empty()) {
      return absl::InvalidArgumentError("empty description");
    }
    return DescriberResult{std::string(absl::StripAsciiWhitespace(*text)),
                           std::nullopt};
  }
  absl::Status last;
  for (int attempt = 0; attempt < 2; ++attempt) {
    auto raw = provider.Describe(req);
    if (!raw.ok()) return raw.status();
    auto parsed = ParseStructuredDescription(*raw);
    if (parsed.ok()) return parsed;
    last = parsed.status();
  }
  return absl::InvalidArgumentError(
      absl::StrCat("structured description rejected twice: ", last.message()));
}

}  // namespace streetnav
