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


// Checked-in generated files must match their generators.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "streetnav/fixture_io.h"
#include "streetnav/message_catalog.h"
#include "streetnav/mock_provider.h"
#include "streetnav/synthetic.h"

namespace streetnav {
namespace {

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path kRoot = STREETNAV_SOURCE_DIR;

TEST(DocsSyncTest, MessageCatalog) {
  EXPECT_EQ(Slurp(kRoot / "docs/messages.md"), MessageCatalogMarkdown())
      << "regenerate with: streetnav messages > docs/messages.md";
}

TEST(DocsSyncTest, MockRules) {
  EXPECT_EQ(Slurp(kRoot / "docs/mock_rules.json"),
            MockRulesJson(DefaultMockRules()) + "\n")
      << "regenerate with: streetnav mock-rules > docs/mock_rules.json";
}

TEST(DocsSyncTest, FixturesMatchBuiltinWorlds) {
  int checked = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(kRoot / "data/fixtures")) {
    const std::string name = entry.path().stem().string();
    auto builtin = synthetic::BuiltinWorld(name);
    ASSERT_TRUE(builtin.has_value()) << name;
    auto parsed = ParseFixture(Slurp(entry.path()));
    ASSERT_TRUE(parsed.ok()) << name << ": " << parsed.status();
    EXPECT_EQ(*parsed, *builtin)
        << "regenerate with: streetnav fixture export " << name;
    ++checked;
  }
  EXPECT_EQ(checked, 8);
}

}  // namespace
}  // namespace streetnav
