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


#include "streetnav/gateway/terminal_client.h"

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "streetnav/gateway/keymap.h"

namespace streetnav::gateway {

void TerminalClient::PrintHelp() { out_ << KeymapHelp(); }

void TerminalClient::Print(const ActionResponse& resp) {
  if (resp.output.stop_speech) out_ << "[stopped]\n";
  for (const StatusMessage& m : resp.output.messages) {
    out_ << "[" << VoiceChannelName(m.channel) << "] " << m.text << "\n";
  }
  for (const std::string& q : resp.output.followups) {
    out_ << "[chat] Follow-up: " << q << "\n";
  }
}

bool TerminalClient::PressKey(const std::string& key,
                              const std::string& text) {
  const std::string name = CanonicalKeyName(key);
  if (echo_) {
    out_ << "> " << name;
    if (!text.empty()) out_ << " " << text;
    out_ << "\n";
  }
  if (name == "q") return false;
  if (name == "?") {
    PrintHelp();
    return true;
  }
  const HotkeyBinding* binding = FindBinding(name);
  if (binding == nullptr) {
    out_ << "[help] \"" << name
         << "\" is not bound to anything. Press ? for the key list.\n";
    return true;
  }
  if (binding->takes_text && absl::StripAsciiWhitespace(text).empty()) {
    out_ << "[help] " << name << " needs text: " << binding->description
         << ".\n";
    return true;
  }
  auto req = RequestForKey(name, text);
  auto resp = gateway_.HandleAction(session_id_, *req);
  if (!resp.ok()) {
    out_ << "[error] " << resp.status().message() << "\n";
    return true;
  }
  Print(*resp);
  out_.flush();
  return true;
}

absl::Status TerminalClient::RunScript(std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed(absl::StripAsciiWhitespace(line));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::string key = trimmed;
    std::string text;
    if (auto sp = trimmed.find(' '); sp != std::string::npos) {
      key = trimmed.substr(0, sp);
      text = std::string(absl::StripAsciiWhitespace(trimmed.substr(sp + 1)));
    }
    if (!PressKey(key, text)) break;
  }
  if (in.bad()) {
    return absl::DataLossError(
        absl::StrCat("script read failed after line ", line_no));
  }
  return absl::OkStatus();
}

}  // namespace streetnav::gateway
