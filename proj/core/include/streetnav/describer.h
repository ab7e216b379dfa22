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


#ifndef STREETNAV_DESCRIBER_H_
#define STREETNAV_DESCRIBER_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "streetnav/geo_context.h"
#include "streetnav/model_provider.h"
#include "streetnav/prompts.h"

namespace streetnav {

inline constexpr int kFollowupCount = 3;

struct StructuredDescription {
  std::vector<std::string> mobility_features;
  std::vector<std::string> obstacles;
  std::string safety_summary;
  std::vector<std::string> followups;  // exactly kFollowupCount

  friend bool operator==(const StructuredDescription&,
                         const StructuredDescription&) = default;
};

struct DescriberResult {
  std::string description;
  std::optional<StructuredDescription> structured;
};

// Validates a structured model response. Errors are InvalidArgument and
// name the offending field.
absl::StatusOr<DescriberResult> ParseStructuredDescription(
    const std::string& raw);

// Renders the prompt, calls the provider and validates the answer. A
// structured answer that fails validation is requested once more before
// giving up; provider errors are returned as is.
absl::StatusOr<DescriberResult> DescribeView(ModelProvider& provider,
                                             const ViewCapture& view,
                                             const GeoContext& ctx,
                                             const UserProfile& profile,
                                             DescriberMode mode,
                                             bool structured);

}  // namespace streetnav

#endif  // STREETNAV_DESCRIBER_H_
