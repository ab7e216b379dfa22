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


#include "streetnav/gateway/gateway.h"

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <utility>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "streetnav/event_log.h"
#include "streetnav/mock_provider.h"

namespace streetnav::gateway {

namespace {

using Json = nlohmann::ordered_json;

Json MessageToJson(const StatusMessage& m, bool voiced) {
  Json j;
  j["text"] = m.text;
  j["channel"] = VoiceChannelName(m.channel);
  j["live"] = m.channel == VoiceChannel::kStatus ? "assertive" : "polite";
  j["voiced"] = voiced;
  Json frags = Json::array();
  for (const Fragment& f : m.fragments) {
    frags.push_back({{"type", FragmentTypeName(f.type)}, {"text", f.text}});
  }
  j["fragments"] = std::move(frags);
  return j;
}

const char* StatusCodeName(absl::StatusCode code) {
  switch (code) {
    case absl::StatusCode::kNotFound:
      return "NOT_FOUND";
    case absl::StatusCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case absl::StatusCode::kFailedPrecondition:
      return "FAILED_PRECONDITION";
    case absl::StatusCode::kAlreadyExists:
      return "ALREADY_EXISTS";
    default:
      return "INTERNAL";
  }
}

}  // namespace

const char* StreamItemTypeName(StreamItemType t) {
  switch (t) {
    case StreamItemType::kEvent:
      return "event";
    case StreamItemType::kMessage:
      return "message";
    case StreamItemType::kSignal:
      return "signal";
  }
  return "event";
}

std::string StreamItemJson(const StreamItem& item) {
  Json j;
  j["seq"] = item.seq;
  j["type"] = StreamItemTypeName(item.type);
  j["body"] = Json::parse(item.body);
  return j.dump();
}

std::string MessageJson(const StatusMessage& m, bool voiced) {
  return MessageToJson(m, voiced).dump();
}

std::string ActionResponseJson(const ActionResponse& r) {
  Json j;
  j["v"] = kApiVersion;
  j["action"] = ActionKindName(r.request.action);
  Json msgs = Json::array();
  for (const StatusMessage& m : r.output.messages) {
    msgs.push_back(MessageToJson(m, r.voiced));
  }
  j["messages"] = std::move(msgs);
  j["followups"] = r.output.followups;
  j["stop_speech"] = r.output.stop_speech;
  j["last_seq"] = r.last_seq;
  j["state"] = Json::parse(r.state_json);
  return j.dump();
}

int HttpStatusFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 200;
    case absl::StatusCode::kNotFound:
      return 404;
    case absl::StatusCode::kInvalidArgument:
      return 400;
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kAlreadyExists:
      return 409;
    default:
      return 500;
  }
}

std::string ErrorJson(const absl::Status& status) {
  Json j;
  j["v"] = kApiVersion;
  j["error"] = {{"code", StatusCodeName(status.code())},
                {"message", std::string(status.message())}};
  return j.dump();
}

struct Gateway::Slot {
  std::string id;
  std::string world_name;
  std::shared_ptr<const World> world;
  NavConfig cfg;
  std::unique_ptr<MockModelProvider> model;
  std::unique_ptr<EventLog> log;
  std::unique_ptr<TeeSink> sink;
  std::unique_ptr<Navigator> nav;
  bool closed = false;

  // Serializes actions.
  std::mutex action_mu;

  mutable std::mutex stream_mu;
  mutable std::condition_variable stream_cv;
  std::vector<StreamItem> stream;

  uint64_t Push(StreamItemType type, std::string body) {
    uint64_t seq;
    {
      std::lock_guard<std::mutex> lock(stream_mu);
      seq = stream.size() + 1;
      stream.push_back({seq, type, std::move(body)});
    }
    stream_cv.notify_all();
    return seq;
  }

  uint64_t last_seq() const {
    std::lock_guard<std::mutex> lock(stream_mu);
    return stream.size();
  }
};

// Feeds each event to the durable log and to the stream, in that order.
class Gateway::TeeSink final : public EventSink {
 public:
  explicit TeeSink(Slot* slot) : slot_(slot) {}
  void Append(const SessionEvent& event) override {
    slot_->log->Append(event);
    slot_->Push(StreamItemType::kEvent, EncodeEvent(event));
  }

 private:
  Slot* slot_;
};

Gateway::Gateway(GatewayOptions options) : options_(std::move(options)) {
  if (options_.clock == nullptr) {
    owned_clock_ = std::make_unique<SystemClock>();
    options_.clock = owned_clock_.get();
  }
}

Gateway::~Gateway() {
  std::lock_guard<std::mutex> lock(mu_);
  for (auto& [id, slot] : sessions_) {
    std::lock_guard<std::mutex> action(slot->action_mu);
    slot->nav.reset();
    slot->log->Close();
  }
}

absl::Status Gateway::RegisterWorld(const std::string& name,
                                    std::shared_ptr<const World> world) {
  if (name.empty()) return absl::InvalidArgumentError("world name is empty");
  if (world == nullptr) return absl::InvalidArgumentError("world is null");
  std::lock_guard<std::mutex> lock(mu_);
  if (!worlds_.emplace(name, std::move(world)).second) {
    return absl::AlreadyExistsError(
        absl::StrCat("world \"", name, "\" is already registered"));
  }
  return absl::OkStatus();
}

std::vector<std::string> Gateway::WorldNames() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> names;
  for (const auto& [name, w] : worlds_) names.push_back(name);
  return names;
}

absl::StatusOr<std::string> Gateway::CreateSession(const SessionSpec& spec) {
  std::shared_ptr<const World> world;
  std::string id;
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::string name = spec.world;
    if (name.empty() && worlds_.size() == 1) name = worlds_.begin()->first;
    auto it = worlds_.find(name);
    if (it == worlds_.end()) {
      return absl::NotFoundError(absl::StrCat("unknown world \"", name, "\""));
    }
    world = it->second;
    id = absl::StrCat("s", next_id_++);
  }

  auto slot = std::make_shared<Slot>();
  slot->id = id;
  slot->world_name = spec.world.empty() ? world->fixture().meta.name
                                        : spec.world;
  slot->world = world;
  slot->cfg = options_.config;
  if (!spec.config_overrides.empty()) {
    auto cfg = NavConfigFromJson(spec.config_overrides, options_.config);
    if (!cfg.ok()) return cfg.status();
    slot->cfg = *cfg;
  }

  std::shared_ptr<LogStorage> storage;
  std::string path = spec.log_path;
  if (path.empty() && !options_.log_dir.empty()) {
    path = (std::filesystem::path(options_.log_dir) / (id + ".ndjson"))
               .string();
  }
  if (!path.empty()) {
    storage = std::make_shared<FileLogStorage>(path);
  } else {
    storage = std::make_shared<MemoryLogStorage>();
  }
  slot->log = std::make_unique<EventLog>(storage, slot->cfg.log_batch_size);
  slot->sink = std::make_unique<TeeSink>(slot.get());

  NavigatorOptions nav_opts;
  nav_opts.profile = options_.profile;
  if (options_.enable_ai) {
    slot->model = std::make_unique<MockModelProvider>(world.get());
    nav_opts.model = slot->model.get();
  }
  std::string start = spec.start_pano;
  if (start.empty()) {
    if (world->fixture().panos.empty()) {
      return absl::FailedPreconditionError("world has no panoramas");
    }
    start = world->fixture().panos.front().id;
  }
  auto nav = Navigator::Start(world->services(), slot->cfg, start,
                              Heading(spec.heading_deg), options_.clock,
                              slot->sink.get(), std::move(nav_opts));
  if (!nav.ok()) {
    absl::Status s = nav.status();
    if (s.code() == absl::StatusCode::kNotFound) {
      return absl::InvalidArgumentError(s.message());
    }
    return s;
  }
  slot->nav = *std::move(nav);

  std::lock_guard<std::mutex> lock(mu_);
  sessions_.emplace(id, std::move(slot));
  return id;
}

absl::StatusOr<std::shared_ptr<Gateway::Slot>> Gateway::Find(
    const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown session \"", id, "\""));
  }
  return it->second;
}

absl::Status Gateway::CloseSession(const std::string& id) {
  auto slot = Find(id);
  if (!slot.ok()) return slot.status();
  {
    std::lock_guard<std::mutex> lock((*slot)->action_mu);
    (*slot)->nav.reset();
    (*slot)->log->Close();
    (*slot)->closed = true;
  }
  std::lock_guard<std::mutex> lock(mu_);
  sessions_.erase(id);
  return absl::OkStatus();
}

std::vector<std::string> Gateway::SessionIds() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> ids;
  for (const auto& [id, s] : sessions_) ids.push_back(id);
  return ids;
}

absl::StatusOr<ActionResponse> Gateway::HandleAction(const std::string& id,
                                                     const ActionRequest& req) {
  auto found = Find(id);
  if (!found.ok()) return found.status();
  Slot& slot = **found;
  std::lock_guard<std::mutex> lock(slot.action_mu);
  if (slot.closed) {
    return absl::NotFoundError(absl::StrCat("unknown session \"", id, "\""));
  }
  Navigator& nav = *slot.nav;

  absl::StatusOr<ActionOutput> out;
  switch (req.action) {
    case ActionKind::kPan:
      out = nav.Pan(req.pan);
      break;
    case ActionKind::kStep:
      out = nav.Step(req.step);
      break;
    case ActionKind::kJump:
      out = nav.Jump();
      break;
    case ActionKind::kTeleport:
      out = nav.Teleport(req.query);
      break;
    case ActionKind::kBack:
      out = nav.GoBack();
      break;
    case ActionKind::kDescribe:
      out = nav.Describe(req.mode, req.structured);
      break;
    case ActionKind::kChatOpen:
      out = nav.ChatOpen();
      break;
    case ActionKind::kChatTurn:
      out = nav.ChatTurn(req.input, req.input_mode);
      break;
    case ActionKind::kChatClose:
      out = nav.ChatClose();
      break;
    case ActionKind::kInfo:
      out = nav.Info(req.info);
      break;
    case ActionKind::kRepeat:
      out = nav.Repeat();
      break;
    case ActionKind::kStopSpeech:
      out = nav.StopSpeech();
      break;
  }
  if (!out.ok()) return out.status();

  const bool voiced = self_voicing();
  if (out->stop_speech) {
    if (voiced) options_.speech->Stop();
    Json sig;
    sig["signal"] = "stop_speech";
    slot.Push(StreamItemType::kSignal, sig.dump());
  }
  for (const StatusMessage& m : out->messages) {
    if (voiced) options_.speech->Speak(m.text, m.channel);
    Json body = MessageToJson(m, voiced);
    body["action"] = ActionKindName(req.action);
    slot.Push(StreamItemType::kMessage, body.dump());
  }

  ActionResponse resp;
  resp.request = req;
  resp.output = *std::move(out);
  resp.state_json = StateJsonLocked(slot);
  resp.last_seq = slot.last_seq();
  resp.voiced = voiced;
  return resp;
}

absl::StatusOr<std::vector<StreamItem>> Gateway::ReadEvents(
    const std::string& id, uint64_t from, int wait_ms) const {
  auto found = Find(id);
  if (!found.ok()) return found.status();
  const Slot& slot = **found;
  if (from == 0) from = 1;
  std::unique_lock<std::mutex> lock(slot.stream_mu);
  if (wait_ms > 0) {
    slot.stream_cv.wait_for(lock, std::chrono::milliseconds(wait_ms),
                            [&] { return slot.stream.size() >= from; });
  }
  std::vector<StreamItem> items;
  for (uint64_t i = from - 1; i < slot.stream.size(); ++i) {
    items.push_back(slot.stream[i]);
  }
  return items;
}

std::string Gateway::StateJsonLocked(const Slot& slot) const {
  const SessionState& s = slot.nav->session().state();
  Json j;
  j["v"] = kApiVersion;
  j["session_id"] = slot.id;
  j["world"] = slot.world_name;
  j["pano_id"] = s.current_pano_id;
  j["heading"] = s.heading.degrees();
  j["compass"] = CompassName(s.heading);
  auto pano = slot.nav->session().CurrentPano();
  j["address"] = pano.ok() ? pano->address.StreetLine() : "";
  j["selected_place"] =
      s.selected_place.has_value() ? Json(*s.selected_place) : Json(nullptr);
  j["undo_depth"] = s.undo_stack.size();
  auto visit = s.visits.find(s.current_pano_id);
  j["visits_here"] = visit == s.visits.end() ? 0 : visit->second.count;
  j["chat_open"] = slot.nav->chat() != nullptr;
  j["self_voicing"] = self_voicing();
  j["last_seq"] = slot.last_seq();
  return j.dump();
}

absl::StatusOr<std::string> Gateway::StateJson(const std::string& id) const {
  auto found = Find(id);
  if (!found.ok()) return found.status();
  std::lock_guard<std::mutex> lock((*found)->action_mu);
  return StateJsonLocked(**found);
}

absl::StatusOr<std::string> Gateway::ExportLog(const std::string& id) const {
  auto found = Find(id);
  if (!found.ok()) return found.status();
  return (*found)->log->Export();
}

}  // namespace streetnav::gateway
