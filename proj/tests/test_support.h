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


#ifndef STREETNAV_TESTS_TEST_SUPPORT_H_
#define STREETNAV_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>
#include <memory>
#include <string>
#include <vector>

#include "streetnav/event_log.h"
#include "streetnav/geo.h"
#include "streetnav/mock_provider.h"
#include "streetnav/model_provider.h"
#include "streetnav/navigator.h"
#include "streetnav/world.h"

namespace streetnav::testing {

// Independent spherical formulas; deliberately not shared with geo.cc.
inline double OracleDistance(const GeoPoint& a, const GeoPoint& b) {
  constexpr double kR = 6371008.8;
  const double rad = M_PI / 180.0;
  const double p1 = a.lat * rad, p2 = b.lat * rad;
  const double c = std::sin(p1) * std::sin(p2) +
                   std::cos(p1) * std::cos(p2) * std::cos((b.lng - a.lng) * rad);
  return kR * std::acos(std::fmin(1.0, std::fmax(-1.0, c)));
}

inline double OracleBearing(const GeoPoint& a, const GeoPoint& b) {
  const double rad = M_PI / 180.0;
  const double y = std::sin((b.lng - a.lng) * rad) * std::cos(b.lat * rad);
  const double x = std::cos(a.lat * rad) * std::sin(b.lat * rad) -
                   std::sin(a.lat * rad) * std::cos(b.lat * rad) *
                       std::cos((b.lng - a.lng) * rad);
  return std::fmod(std::atan2(y, x) / rad + 360.0, 360.0);
}

// 0 front, 1 right, 2 behind, 3 left.
inline int OracleBucket(double target_deg, double heading_deg) {
  double d = std::fmod(target_deg - heading_deg + 720.0, 360.0);
  if (d > 180.0) d -= 360.0;
  if (std::fabs(d) < 45.0) return 0;
  if (d >= 45.0 && d < 135.0) return 1;
  if (std::fabs(d) >= 135.0) return 2;
  return 3;
}

inline const char* BucketPhrase(int b) {
  static const char* kPhrases[] = {"in front of you", "to your right",
                                   "behind you", "to your left"};
  return kPhrases[b];
}

// Compares `actual` with tests/golden/<name>. With STREETNAV_UPDATE_GOLDEN
// set, rewrites the file instead; review the diff before committing.
inline std::string GoldenPath(const std::string& name) {
  return std::string(STREETNAV_GOLDEN_DIR) + "/" + name;
}

inline std::string ReadGolden(const std::string& name) {
  if (std::getenv("STREETNAV_UPDATE_GOLDEN") != nullptr) return "";
  std::ifstream in(GoldenPath(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string Golden(const std::string& name, const std::string& actual) {
  if (std::getenv("STREETNAV_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(GoldenPath(name)) << actual;
    return actual;
  }
  return ReadGolden(name);
}

// Replays canned answers and records what it was sent.
class ScriptedModelProvider final : public ModelProvider {
 public:
  struct Log {
    std::vector<std::vector<ContextPart>> sent;
    std::vector<std::string> inputs;
    std::vector<uint64_t> evicted;
    int closes = 0;
  };

  std::deque<absl::StatusOr<std::string>> describe_replies;
  std::deque<absl::StatusOr<ModelReply>> chat_replies;
  absl::Status open_status;
  int describe_calls = 0;
  std::vector<DescribeRequest> describe_requests;
  std::shared_ptr<Log> log = std::make_shared<Log>();

  absl::StatusOr<std::string> Describe(const DescribeRequest& req) override {
    ++describe_calls;
    describe_requests.push_back(req);
    if (describe_replies.empty()) return absl::UnavailableError("no script");
    auto r = describe_replies.front();
    describe_replies.pop_front();
    return r;
  }

  absl::StatusOr<std::unique_ptr<ChatChannel>> OpenChat(
      const std::string&, const std::vector<FunctionDeclaration>&) override {
    if (!open_status.ok()) return open_status;
    return std::unique_ptr<ChatChannel>(new Channel(this));
  }

 private:
  class Channel final : public ChatChannel {
   public:
    explicit Channel(ScriptedModelProvider* p) : p_(p) {}
    absl::Status Send(const std::vector<ContextPart>& parts) override {
      p_->log->sent.push_back(parts);
      return absl::OkStatus();
    }
    absl::StatusOr<ModelReply> Turn(const std::string& input) override {
      p_->log->inputs.push_back(input);
      if (p_->chat_replies.empty()) return ModelReply{"ok", {}};
      auto r = p_->chat_replies.front();
      p_->chat_replies.pop_front();
      return r;
    }
    void Evict(uint64_t id) override { p_->log->evicted.push_back(id); }
    void Close() override { ++p_->log->closes; }

   private:
    ScriptedModelProvider* p_;
  };
};

// A navigator over a fixture with a deterministic clock and in-memory log.
struct NavHarness {
  std::shared_ptr<const World> world;
  ManualClock clock{1000, 5};
  std::shared_ptr<MemoryLogStorage> storage =
      std::make_shared<MemoryLogStorage>();
  EventLog log{storage, 10};
  std::unique_ptr<MockModelProvider> mock;
  std::unique_ptr<Navigator> nav;

  NavHarness(WorldFixture f, const std::string& start, Heading h,
             NavConfig cfg = {}, ModelProvider* model = nullptr,
             bool use_mock = true) {
    world = *World::Create(std::move(f));
    mock = std::make_unique<MockModelProvider>(world.get());
    NavigatorOptions opts;
    opts.model = model != nullptr ? model : (use_mock ? mock.get() : nullptr);
    auto n = Navigator::Start(world->services(), cfg, start, h, &clock, &log,
                              std::move(opts));
    if (n.ok()) nav = *std::move(n);
  }

  const SessionState& state() const { return nav->session().state(); }
};

}  // namespace streetnav::testing

#endif  // STREETNAV_TESTS_TEST_SUPPORT_H_
