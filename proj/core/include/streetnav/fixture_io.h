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


#ifndef STREETNAV_FIXTURE_IO_H_
#define STREETNAV_FIXTURE_IO_H_

#include <istream>
#include <string>

#include "absl/status/statusor.h"
#include "streetnav/world_types.h"

namespace streetnav {

// World fixture documents: one UTF-8 JSON object with top-level keys
// `meta`, `panos`, `places`, `roads`, `imagery`. See docs/fixture_format.md.
//
// Parse errors are InvalidArgument with a JSON path ("panos[2].links[0].
// heading: expected number"); referential problems are FailedPrecondition
// naming the dangling id. Missing imagery entries default to eight empty
// views.
absl::StatusOr<WorldFixture> ParseFixture(const std::string& json_text);
absl::StatusOr<WorldFixture> LoadFixture(std::istream& in);
absl::StatusOr<WorldFixture> LoadFixtureFile(const std::string& path);

// Deterministic serialization; ParseFixture(SerializeFixture(f)) == f.
std::string SerializeFixture(const WorldFixture& fixture);

}  // namespace streetnav

#endif  // STREETNAV_FIXTURE_IO_H_
