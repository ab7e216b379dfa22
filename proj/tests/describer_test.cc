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

#include "gtest/gtest.h"
#include "streetnav/synthetic.h"
#include "streetnav/world.h"
#include "test_support.h"

namespace streetnav {
namespace {

using ::streetnav::testing::ScriptedModelProvider;

constexpr char kValid[] =
    R"({"description":"A bench ahead.","mobility_features":["sidewalk"],)"
    R"("obstacles":[],"safety_summary":"Clear path.",)"
    R"("followups":["a?","b?","c?"]})";

class DescriberTest : public ::testing::Test {
 protected:
  absl::StatusOr<DescriberResult> Run(ModelProvider& p, bool structured,
                                      DescriberMode mode = DescriberMode::kDefault) {
    return DescribeView(p, view_, ctx_, {}, mode, structured);
  }
  ViewCapture view_{"bus_c", Heading(0), 640, 640, "bus_c/0"};
  GeoContext ctx_;
};

TEST_F(DescriberTest, ParsesValidStructuredResponse) {
  auto r = ParseStructuredDescription(kValid);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->description, "A bench ahead.");
  ASSERT_TRUE(r->structured.has_value());
  EXPECT_EQ(r->structured->followups.size(), 3u);
  EXPECT_EQ(r->structured->mobility_features,
            std::vector<std::string>{"sidewalk"});
}

TEST_F(DescriberTest, SchemaViolationsNameTheField) {
  EXPECT_EQ(ParseStructuredDescription("not json").status().message(),
            "response is not a JSON object");
  EXPECT_EQ(
      ParseStructuredDescription(
          R"({"description":"x","mobility_features":[],"obstacles":[],)"
          R"("safety_summary":"s","followups":["a","b"]})")
          .status()
          .message(),
      "followups: expected 3 questions, got 2");
  EXPECT_EQ(ParseStructuredDescription(
                R"({"description":"x","mobility_features":[1],"obstacles":[],)"
                R"("safety_summary":"s","followups":["a","b","c"]})")
                .status()
                .message(),
            "mobility_features: expected an array of strings");
  EXPECT_EQ(ParseStructuredDescription(
                R"({"description":"","mobility_features":[],"obstacles":[],)"
                R"("safety_summary":"s","followups":["a","b","c"]})")
                .status()
                .message(),
            "description: expected a non-empty string");
}

TEST_F(DescriberTest, RetriesOnceAfterSchemaViolation) {
  ScriptedModelProvider p;
  p.describe_replies = {std::string("{}"), std::string(kValid)};
  auto r = Run(p, true);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(p.describe_calls, 2);
}

TEST_F(DescriberTest, GivesUpAfterSecondViolation) {
  ScriptedModelProvider p;
  p.describe_replies = {std::string("{}"), std::string("[]"),
                        std::string(kValid)};
  auto r = Run(p, true);
  EXPECT_TRUE(absl::IsInvalidArgument(r.status()));
  EXPECT_EQ(p.describe_calls, 2);
}

TEST_F(DescriberTest, ProviderFailureIsNotRetried) {
  ScriptedModelProvider p;
  p.describe_replies = {absl::DeadlineExceededError("timeout")};
  auto r = Run(p, true);
  EXPECT_TRUE(absl::IsDeadlineExceeded(r.status()));
  EXPECT_EQ(p.describe_calls, 1);
}

TEST_F(DescriberTest, UnstructuredReturnsTrimmedText) {
  ScriptedModelProvider p;
  p.describe_replies = {std::string("  A quiet street.\n")};
  auto r = Run(p, false, DescriberMode::kTourGuide);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->description, "A quiet street.");
  EXPECT_FALSE(r->structured.has_value());
  ASSERT_EQ(p.describe_requests.size(), 1u);
  EXPECT_EQ(p.describe_requests[0].mode, DescriberMode::kTourGuide);
  EXPECT_FALSE(p.describe_requests[0].structured);
}

TEST_F(DescriberTest, MockStructuredAlwaysValid) {
  auto world = *World::Create(synthetic::MakePoiScenarioWorld());
  MockModelProvider mock(world.get());
  for (const Panorama& pano : world->fixture().panos) {
    for (int o = 0; o < 8; ++o) {
      SessionState st;
      st.current_pano_id = pano.id;
      st.heading = Heading::FromOctant(o);
      auto ctx = AssembleGeoContext(st, world->services(), {});
      ASSERT_TRUE(ctx.ok());
      ViewCapture v{pano.id, st.heading, 640, 640, ""};
      for (DescriberMode m : {DescriberMode::kDefault, DescriberMode::kTourGuide}) {
        auto r = DescribeView(mock, v, *ctx, {}, m, true);
        ASSERT_TRUE(r.ok()) << pano.id << " " << r.status();
        EXPECT_EQ(r->structured->followups.size(), 3u);
      }
    }
  }
}

}  // namespace
}  // namespace streetnav
