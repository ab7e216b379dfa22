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


#include "streetnav/gateway/actions.h"

#include <set>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace streetnav::gateway {

namespace {

using Json = nlohmann::json;

struct ActionName {
  ActionKind kind;
  const char* name;
};

constexpr ActionName kActionNames[] = {
    {ActionKind::kPan, "pan"},
    {ActionKind::kStep, "step"},
    {ActionKind::kJump, "jump"},
    {ActionKind::kTeleport, "teleport"},
    {ActionKind::kBack, "back"},
    {ActionKind::kDescribe, "describe"},
    {ActionKind::kChatOpen, "chat_open"},
    {ActionKind::kChatTurn, "chat_turn"},
    {ActionKind::kChatClose, "chat_close"},
    {ActionKind::kInfo, "info"},
    {ActionKind::kRepeat, "repeat"},
    {ActionKind::kStopSpeech, "stop_speech"},
};

// Fields each action accepts besides "v" and "action".
std::set<std::string> AllowedFields(ActionKind k) {
  switch (k) {
    case ActionKind::kPan:
    case ActionKind::kStep:
      return {"direction"};
    case ActionKind::kTeleport:
      return {"query"};
    case ActionKind::kDescribe:
      return {"mode", "structured"};
    case ActionKind::kChatTurn:
      return {"input", "input_mode"};
    case ActionKind::kInfo:
      return {"kind"};
    default:
      return {};
  }
}

absl::Status Bad(const std::string& msg) {
  return absl::InvalidArgumentError(msg);
}

absl::StatusOr<std::string> RequiredString(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return Bad(absl::StrCat(key, ": required"));
  if (!it->is_string()) return Bad(absl::StrCat(key, ": expected a string"));
  return it->get<std::string>();
}

absl::StatusOr<std::string> OptionalString(const Json& j, const char* key,
                                           const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  return RequiredString(j, key);
}

}  // namespace

const char* ActionKindName(ActionKind k) {
  for (const auto& e : kActionNames) {
    if (e.kind == k) return e.name;
  }
  return "repeat";
}

std::optional<ActionKind> ActionKindFromName(const std::string& name) {
  for (const auto& e : kActionNames) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

const std::vector<ActionKind>& AllActionKinds() {
  static const std::vector<ActionKind> kAll = [] {
    std::vector<ActionKind> v;
    for (const auto& e : kActionNames) v.push_back(e.kind);
    return v;
  }();
  return kAll;
}

ActionRequest PanRequest(PanDirection d) {
  ActionRequest r;
  r.action = ActionKind::kPan;
  r.pan = d;
  return r;
}

ActionRequest StepRequest(StepDirection d) {
  ActionRequest r;
  r.action = ActionKind::kStep;
  r.step = d;
  return r;
}

ActionRequest InfoRequest(InfoKind k) {
  ActionRequest r;
  r.action = ActionKind::kInfo;
  r.info = k;
  return r;
}

absl::StatusOr<ActionRequest> ParseActionRequest(const std::string& json) {
  const Json j = Json::parse(json, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return Bad("request is not a JSON object");
  }
  auto v = j.find("v");
  if (v == j.end() || !v->is_number_integer() || v->get<int>() != kApiVersion) {
    return Bad(absl::StrCat("v: expected ", kApiVersion));
  }
  auto name = RequiredString(j, "action");
  if (!name.ok()) return name.status();
  auto kind = ActionKindFromName(*name);
  if (!kind) return Bad(absl::StrCat("action: unknown action \"", *name, "\""));

  const std::set<std::string> allowed = AllowedFields(*kind);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "v" || it.key() == "action") continue;
    if (!allowed.count(it.key())) {
      return Bad(absl::StrCat(it.key(), ": not a field of ", *name));
    }
  }

  ActionRequest r;
  r.action = *kind;
  switch (*kind) {
    case ActionKind::kPan: {
      auto d = RequiredString(j, "direction");
      if (!d.ok()) return d.status();
      if (*d == "left") {
        r.pan = PanDirection::kLeft;
      } else if (*d == "right") {
        r.pan = PanDirection::kRight;
      } else {
        return Bad("direction: expected \"left\" or \"right\"");
      }
      break;
    }
    case ActionKind::kStep: {
      auto d = RequiredString(j, "direction");
      if (!d.ok()) return d.status();
      if (*d == "forward") {
        r.step = StepDirection::kForward;
      } else if (*d == "backward") {
        r.step = StepDirection::kBackward;
      } else {
        return Bad("direction: expected \"forward\" or \"backward\"");
      }
      break;
    }
    case ActionKind::kTeleport: {
      auto q = RequiredString(j, "query");
      if (!q.ok()) return q.status();
      if (absl::StripAsciiWhitespace(*q).empty()) {
        return Bad("query: must not be empty");
      }
      r.query = *q;
      break;
    }
    case ActionKind::kDescribe: {
      auto m = OptionalString(j, "mode", "default");
      if (!m.ok()) return m.status();
      if (*m == "default") {
        r.mode = DescriberMode::kDefault;
      } else if (*m == "tour_guide") {
        r.mode = DescriberMode::kTourGuide;
      } else {
        return Bad("mode: expected \"default\" or \"tour_guide\"");
      }
      if (auto s = j.find("structured"); s != j.end()) {
        if (!s->is_boolean()) return Bad("structured: expected a boolean");
        r.structured = s->get<bool>();
      }
      break;
    }
    case ActionKind::kChatTurn: {
      auto in = RequiredString(j, "input");
      if (!in.ok()) return in.status();
      if (absl::StripAsciiWhitespace(*in).empty()) {
        return Bad("input: must not be empty");
      }
      r.input = *in;
      auto m = OptionalString(j, "input_mode", "typed");
      if (!m.ok()) return m.status();
      if (*m == "typed") {
        r.input_mode = ChatInputMode::kTyped;
      } else if (*m == "speech") {
        r.input_mode = ChatInputMode::kSpeech;
      } else {
        return Bad("input_mode: expected \"typed\" or \"speech\"");
      }
      break;
    }
    case ActionKind::kInfo: {
      auto k = RequiredString(j, "kind");
      if (!k.ok()) return k.status();
      auto info = InfoKindFromName(*k);
      if (!info) return Bad(absl::StrCat("kind: unknown info kind \"", *k, "\""));
      r.info = *info;
      break;
    }
    default:
      break;
  }
  return r;
}

std::string ActionRequestJson(const ActionRequest& req) {
  nlohmann::ordered_json j;
  j["v"] = kApiVersion;
  j["action"] = ActionKindName(req.action);
  switch (req.action) {
    case ActionKind::kPan:
      j["direction"] = req.pan == PanDirection::kLeft ? "left" : "right";
      break;
    case ActionKind::kStep:
      j["direction"] =
          req.step == StepDirection::kForward ? "forward" : "backward";
      break;
    case ActionKind::kTeleport:
      j["query"] = req.query;
      break;
    case ActionKind::kDescribe:
      j["mode"] = DescriberModeName(req.mode);
      j["structured"] = req.structured;
      break;
    case ActionKind::kChatTurn:
      j["input"] = req.input;
      j["input_mode"] = ChatInputModeName(req.input_mode);
      break;
    case ActionKind::kInfo:
      j["kind"] = InfoKindName(req.info);
      break;
    default:
      break;
  }
  return j.dump();
}

}  // namespace streetnav::gateway
