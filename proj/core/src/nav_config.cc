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


#include "streetnav/nav_config.h"

#include <algorithm>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace streetnav {

namespace {

using Member = std::variant<double NavConfig::*, int NavConfig::*,
                            int64_t NavConfig::*>;

const std::vector<std::pair<const char*, Member>>& Fields() {
  static const std::vector<std::pair<const char*, Member>> kFields = {
      {"pan_increment_deg", &NavConfig::pan_increment_deg},
      {"facing_cone_deg", &NavConfig::facing_cone_deg},
      {"facing_max_distance_m", &NavConfig::facing_max_distance_m},
      {"nearby_radius_m", &NavConfig::nearby_radius_m},
      {"grid_extent_m", &NavConfig::grid_extent_m},
      {"grid_step_m", &NavConfig::grid_step_m},
      {"ray_step_m", &NavConfig::ray_step_m},
      {"jump_max_m", &NavConfig::jump_max_m},
      {"forward_tolerance_deg", &NavConfig::forward_tolerance_deg},
      {"undo_depth", &NavConfig::undo_depth},
      {"capture_size_px", &NavConfig::capture_size_px},
      {"chat_token_budget", &NavConfig::chat_token_budget},
      {"teleport_max_pano_distance_m",
       &NavConfig::teleport_max_pano_distance_m},
      {"chars_per_token", &NavConfig::chars_per_token},
      {"tokens_per_image", &NavConfig::tokens_per_image},
      {"min_retained_views", &NavConfig::min_retained_views},
      {"log_batch_size", &NavConfig::log_batch_size},
  };
  return kFields;
}

}  // namespace

absl::StatusOr<NavConfig> NavConfigFromJson(const std::string& json,
                                            const NavConfig& base) {
  using Json = nlohmann::json;
  const Json j = Json::parse(json, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("config: expected a JSON object");
  }
  NavConfig cfg = base;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& fields = Fields();
    auto f = std::find_if(fields.begin(), fields.end(), [&](const auto& e) {
      return it.key() == e.first;
    });
    if (f == fields.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: unknown field \"", it.key(), "\""));
    }
    const Json& v = it.value();
    const bool ok = std::visit(
        [&](auto member) {
          using T = std::remove_reference_t<decltype(cfg.*member)>;
          if constexpr (std::is_floating_point_v<T>) {
            if (!v.is_number()) return false;
            cfg.*member = v.get<double>();
          } else {
            if (!v.is_number_integer()) return false;
            cfg.*member = v.get<T>();
          }
          return true;
        },
        f->second);
    if (!ok) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: field \"", it.key(), "\" has the wrong type"));
    }
  }
  if (auto s = cfg.Validate(); !s.ok()) return s;
  return cfg;
}

std::string NavConfigToJson(const NavConfig& cfg) {
  nlohmann::ordered_json j;
  for (const auto& [name, member] : Fields()) {
    std::visit([&](auto m) { j[name] = cfg.*m; }, member);
  }
  return j.dump(2);
}

absl::Status NavConfig::Validate() const {
  const double positives[] = {pan_increment_deg,     facing_cone_deg,
                              facing_max_distance_m, nearby_radius_m,
                              grid_extent_m,         grid_step_m,
                              ray_step_m,            jump_max_m,
                              forward_tolerance_deg};
  for (double v : positives) {
    if (!(v > 0.0)) {
      return absl::InvalidArgumentError("navigation thresholds must be > 0");
    }
  }
  if (forward_tolerance_deg > pan_increment_deg / 2.0) {
    return absl::InvalidArgumentError(
        "forward_tolerance_deg must not exceed pan_increment_deg / 2");
  }
  if (undo_depth < 1 || capture_size_px < 1 || chat_token_budget < 1 ||
      chars_per_token < 1 || tokens_per_image < 1 || min_retained_views < 1 ||
      log_batch_size < 1 || !(teleport_max_pano_distance_m > 0.0)) {
    return absl::InvalidArgumentError("navigation limits must be positive");
  }
  return absl::OkStatus();
}

}  // namespace streetnav
