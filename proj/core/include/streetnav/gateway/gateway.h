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


#ifndef STREETNAV_GATEWAY_GATEWAY_H_
#define STREETNAV_GATEWAY_GATEWAY_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "streetnav/gateway/actions.h"
#include "streetnav/gateway/speech.h"
#include "streetnav/nav_config.h"
#include "streetnav/navigator.h"
#include "streetnav/session.h"
#include "streetnav/world.h"

namespace streetnav::gateway {

struct GatewayOptions {
  // Defaults for new sessions; per-session overrides apply on top.
  NavConfig config;
  // Each session appends its log to <log_dir>/<session id>.ndjson. Empty
  // keeps logs in memory.
  std::string log_dir;
  // Non-null makes the gateway self-voicing: every message is spoken and
  // stop_speech stops the provider. Null emits text only, with live-region
  // hints for a screen-reader client. Not owned.
  SpeechProvider* speech = nullptr;
  // Null uses the system clock. Not owned.
  const Clock* clock = nullptr;
  UserProfile profile;
  // Attach the deterministic mock model for describe and chat.
  bool enable_ai = true;
};

struct SessionSpec {
  std::string world;
  // Empty starts at the first panorama of the fixture.
  std::string start_pano;
  double heading_deg = 0.0;
  // JSON object of NavConfig field overrides; empty for none.
  std::string config_overrides;
  // Overrides the log file for this session.
  std::string log_path;
};

enum class StreamItemType { kEvent, kMessage, kSignal };
const char* StreamItemTypeName(StreamItemType t);

// One entry of a session's event stream. `seq` starts at 1 and increases
// by one per item. `body` is compact JSON: an event log record, a message
// or a signal.
struct StreamItem {
  uint64_t seq = 0;
  StreamItemType type = StreamItemType::kEvent;
  std::string body;
  friend bool operator==(const StreamItem&, const StreamItem&) = default;
};

// {"seq":N,"type":"event","body":{...}}
std::string StreamItemJson(const StreamItem& item);

// Message body sent on the stream and in action responses.
std::string MessageJson(const StatusMessage& m, bool voiced);

struct ActionResponse {
  ActionRequest request;
  ActionOutput output;
  std::string state_json;
  uint64_t last_seq = 0;
  bool voiced = false;
};

// {"v":1,"action":..,"messages":[..],"followups":[..],"stop_speech":..,
//  "last_seq":N,"state":{..}}
std::string ActionResponseJson(const ActionResponse& r);

// Hosts sessions over registered worlds. Sessions run concurrently; the
// actions of one session are serialized. Thread-safe.
class Gateway {
 public:
  explicit Gateway(GatewayOptions options);
  ~Gateway();
  Gateway(const Gateway&) = delete;
  Gateway& operator=(const Gateway&) = delete;

  absl::Status RegisterWorld(const std::string& name,
                             std::shared_ptr<const World> world);
  std::vector<std::string> WorldNames() const;

  // Returns the new session id ("s1", "s2", ...). Unknown worlds are
  // NotFound; bad overrides or start positions are InvalidArgument.
  absl::StatusOr<std::string> CreateSession(const SessionSpec& spec);
  absl::Status CloseSession(const std::string& id);
  std::vector<std::string> SessionIds() const;

  // Unknown sessions are NotFound.
  absl::StatusOr<ActionResponse> HandleAction(const std::string& id,
                                              const ActionRequest& req);

  // Items with seq >= from. When none exist yet, waits up to `wait_ms`
  // for the first one.
  absl::StatusOr<std::vector<StreamItem>> ReadEvents(const std::string& id,
                                                     uint64_t from,
                                                     int wait_ms = 0) const;

  absl::StatusOr<std::string> StateJson(const std::string& id) const;
  // NDJSON export of the session's event log.
  absl::StatusOr<std::string> ExportLog(const std::string& id) const;

  bool self_voicing() const { return options_.speech != nullptr; }

 private:
  struct Slot;
  class TeeSink;

  absl::StatusOr<std::shared_ptr<Slot>> Find(const std::string& id) const;
  std::string StateJsonLocked(const Slot& slot) const;

  GatewayOptions options_;
  std::unique_ptr<Clock> owned_clock_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const World>> worlds_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  uint64_t next_id_ = 1;
};

// HTTP status for a gateway error: 404 NotFound, 400 InvalidArgument,
// 409 FailedPrecondition/AlreadyExists, 500 otherwise.
int HttpStatusFor(const absl::Status& status);
// {"v":1,"error":{"code":"NOT_FOUND","message":"..."}}
std::string ErrorJson(const absl::Status& status);

}  // namespace streetnav::gateway

#endif  // STREETNAV_GATEWAY_GATEWAY_H_
