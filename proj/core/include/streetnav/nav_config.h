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


#ifndef STREETNAV_NAV_CONFIG_H_
#define STREETNAV_NAV_CONFIG_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace streetnav {

// Every tunable threshold of the engine. Defaults reproduce the reference
// interaction design; all values are positive.
struct NavConfig {
  double pan_increment_deg = 45.0;
  // Facing clause: places within this angle of the heading (inclusive) ...
  double facing_cone_deg = 45.0;
  // ... and at most this far away.
  double facing_max_distance_m = 35.0;
  double nearby_radius_m = 50.0;
  // Side of the square used for the egocentric graph and intersection grids.
  double grid_extent_m = 20.0;
  // Point-query spacing for providers without range queries.
  double grid_step_m = 5.0;
  double ray_step_m = 15.0;
  double jump_max_m = 70.0;
  double forward_tolerance_deg = 22.5;
  int undo_depth = 1;
  int capture_size_px = 640;
  int64_t chat_token_budget = 1048576;

  // Teleport gives up when no panorama lies within this distance of the
  // destination.
  double teleport_max_pano_distance_m = 1000.0;

  // Chat context bookkeeping.
  int chars_per_token = 4;
  int64_t tokens_per_image = 258;
  int min_retained_views = 8;

  // Event log flushes to storage every this many entries.
  int log_batch_size = 10;

  double half_grid() const { return grid_extent_m / 2.0; }

  absl::Status Validate() const;
};

// Applies a JSON object of field overrides on top of `base` and validates
// the result. Unknown keys and mistyped values are InvalidArgument.
absl::StatusOr<NavConfig> NavConfigFromJson(const std::string& json,
                                            const NavConfig& base = {});
std::string NavConfigToJson(const NavConfig& cfg);

}  // namespace streetnav

#endif  // STREETNAV_NAV_CONFIG_H_
