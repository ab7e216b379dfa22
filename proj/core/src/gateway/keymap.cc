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


#include "streetnav/gateway/keymap.h"

#include <cctype>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_replace.h"

namespace streetnav::gateway {

namespace {

ActionRequest Simple(ActionKind k) {
  ActionRequest r;
  r.action = k;
  return r;
}

ActionRequest Describe(DescriberMode mode, bool structured) {
  ActionRequest r = Simple(ActionKind::kDescribe);
  r.mode = mode;
  r.structured = structured;
  return r;
}

ActionRequest Chat(ChatInputMode mode) {
  ActionRequest r = Simple(ActionKind::kChatTurn);
  r.input_mode = mode;
  return r;
}

std::vector<HotkeyBinding> MakeBindings() {
  std::vector<HotkeyBinding> b = {
      {"Left", "Rotate left 45 degrees", PanRequest(PanDirection::kLeft)},
      {"Right", "Rotate right 45 degrees", PanRequest(PanDirection::kRight)},
      {"Up", "Move forward at the current heading",
       StepRequest(StepDirection::kForward)},
      {"Down", "Move backward at the current heading",
       StepRequest(StepDirection::kBackward)},
      {"Alt+B", "Go back to the last location", Simple(ActionKind::kBack)},
      {"Alt+J", "Jump to the next intersection or up to 70 meters",
       Simple(ActionKind::kJump)},
      {"Alt+D", "Describe the current view with AI",
       Describe(DescriberMode::kDefault, false)},
      {"Alt+C", "Chat with the AI agent (typing)", Chat(ChatInputMode::kTyped),
       true},
      {"Alt+Space", "Talk with the AI agent (speaking)",
       Chat(ChatInputMode::kSpeech), true},
      {"Alt+A", "Repeat the previous output", Simple(ActionKind::kRepeat)},
      {"Esc", "Stop the current speech output",
       Simple(ActionKind::kStopSpeech)},
      {"Alt+W", "Where am I: address and heading",
       InfoRequest(InfoKind::kWhere)},
      {"Alt+N", "Nearby places", InfoRequest(InfoKind::kNearby)},
      {"Alt+I", "Current and next intersection",
       InfoRequest(InfoKind::kIntersections)},
      {"Alt+M", "Possible movements here", InfoRequest(InfoKind::kMovements)},
      {"Alt+V", "Visit history for this location",
       InfoRequest(InfoKind::kVisits)},
      {"Alt+P", "Date and photographer of this image",
       InfoRequest(InfoKind::kPhoto)},
  };
  b.push_back({"/", "Search for a place and teleport there",
               Simple(ActionKind::kTeleport), true, false});
  b.push_back({"Alt+G", "Generate a structured description with follow-ups",
               Describe(DescriberMode::kDefault, true), false, false});
  b.push_back({"Alt+T", "Describe the current view as a tour guide",
               Describe(DescriberMode::kTourGuide, false), false, false});
  b.push_back({"Alt+O", "Open the chat without sending anything",
               Simple(ActionKind::kChatOpen), false, false});
  b.push_back({"Alt+X", "Close the chat", Simple(ActionKind::kChatClose),
               false, false});
  return b;
}

}  // namespace

const std::vector<HotkeyBinding>& HotkeyBindings() {
  static const std::vector<HotkeyBinding> kBindings = MakeBindings();
  return kBindings;
}

const HotkeyBinding* FindBinding(const std::string& key) {
  const std::string name = CanonicalKeyName(key);
  for (const HotkeyBinding& b : HotkeyBindings()) {
    if (b.key == name) return &b;
  }
  return nullptr;
}

std::optional<ActionRequest> RequestForKey(const std::string& key,
                                           const std::string& text) {
  const HotkeyBinding* b = FindBinding(key);
  if (b == nullptr) return std::nullopt;
  ActionRequest r = b->request;
  if (r.action == ActionKind::kTeleport) r.query = text;
  if (r.action == ActionKind::kChatTurn) r.input = text;
  return r;
}

std::string CanonicalKeyName(const std::string& key) {
  std::string k = absl::AsciiStrToLower(absl::StripAsciiWhitespace(key));
  k = absl::StrReplaceAll(k, {{"-", "+"}, {" arrow", ""}, {"arrow", ""}});
  k = absl::StrReplaceAll(k, {{" ", ""}});
  if (k == "left" || k == "right" || k == "up" || k == "down") {
    k[0] = static_cast<char>(std::toupper(k[0]));
    return k;
  }
  if (k == "esc" || k == "escape") return "Esc";
  if (k.rfind("alt+", 0) == 0 || k.rfind("option+", 0) == 0) {
    std::string rest = k.substr(k.find('+') + 1);
    if (rest == "space" || rest == "spacebar") return "Alt+Space";
    if (rest.size() == 1 && std::isalpha(static_cast<unsigned char>(rest[0]))) {
      return absl::StrCat("Alt+", absl::AsciiStrToUpper(rest));
    }
  }
  if (key.size() == 1) return key;
  return std::string(absl::StripAsciiWhitespace(key));
}

std::string KeymapHelp() {
  std::string out = "Keys:\n";
  for (const HotkeyBinding& b : HotkeyBindings()) {
    absl::StrAppend(&out, absl::StrFormat("  %-10s %s\n", b.key,
                                          b.description));
  }
  absl::StrAppend(&out, absl::StrFormat("  %-10s %s\n", "?", "Show this help"));
  absl::StrAppend(&out, absl::StrFormat("  %-10s %s\n", "q", "Quit"));
  return out;
}

std::vector<std::string> KeyDecoder::Feed(const std::string& bytes) {
  pending_ += bytes;
  std::vector<std::string> keys;
  size_t i = 0;
  while (i < pending_.size()) {
    const unsigned char c = pending_[i];
    if (c != 0x1b) {
      if (c == '\r' || c == '\n') {
        keys.push_back("Enter");
      } else if (c == 0x7f || c == 0x08) {
        keys.push_back("Backspace");
      } else if (c < 0x20) {
        keys.push_back(absl::StrCat("Ctrl+", std::string(1, c + '@')));
      } else {
        keys.push_back(std::string(1, static_cast<char>(c)));
      }
      ++i;
      continue;
    }
    if (i + 1 >= pending_.size()) break;  // lone ESC: wait for more
    const char next = pending_[i + 1];
    if (next == '[' || next == 'O') {
      if (i + 2 >= pending_.size()) break;
      static constexpr struct {
        char code;
        const char* name;
      } kArrows[] = {{'A', "Up"}, {'B', "Down"}, {'C', "Right"}, {'D', "Left"}};
      std::string name;
      for (const auto& a : kArrows) {
        if (pending_[i + 2] == a.code) name = a.name;
      }
      if (!name.empty()) {
        keys.push_back(name);
        i += 3;
        continue;
      }
      // Some other CSI sequence: skip to its final byte.
      size_t j = i + 2;
      while (j < pending_.size() &&
             !(pending_[j] >= 0x40 && pending_[j] <= 0x7e)) {
        ++j;
      }
      if (j >= pending_.size()) break;
      i = j + 1;
      continue;
    }
    if (next == 0x1b) {
      keys.push_back("Esc");
      ++i;
      continue;
    }
    if (next == ' ') {
      keys.push_back("Alt+Space");
    } else if (std::isalpha(static_cast<unsigned char>(next))) {
      keys.push_back(absl::StrCat(
          "Alt+", std::string(1, static_cast<char>(std::toupper(
                                     static_cast<unsigned char>(next))))));
    } else {
      keys.push_back(absl::StrCat("Alt+", std::string(1, next)));
    }
    i += 2;
  }
  pending_.erase(0, i);
  return keys;
}

std::vector<std::string> KeyDecoder::Flush() {
  std::vector<std::string> keys;
  if (pending_ == "\x1b") keys.push_back("Esc");
  pending_.clear();
  return keys;
}

}  // namespace streetnav::gateway
