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


#ifndef STREETNAV_GATEWAY_TERMINAL_CLIENT_H_
#define STREETNAV_GATEWAY_TERMINAL_CLIENT_H_

#include <istream>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "streetnav/gateway/gateway.h"

namespace streetnav::gateway {

// Drives one gateway session from key names. Status messages print as
// "[status] ..." and chat output as "[chat] ..."; the two prefixes stand in
// for the two voices.
class TerminalClient {
 public:
  TerminalClient(Gateway& gateway, std::string session_id, std::ostream& out)
      : gateway_(gateway), session_id_(std::move(session_id)), out_(out) {}

  // Echo each key as "> key" before its output. On for scripts.
  void set_echo(bool echo) { echo_ = echo; }

  // Runs one key; keys that take text use `text`. Returns false for "q".
  bool PressKey(const std::string& key, const std::string& text = "");

  // One key per line, optionally followed by a space and its text:
  //   Left
  //   / Shakespeare's Globe
  //   Alt+C is there a bench nearby?
  // Blank lines and lines starting with '#' are skipped.
  absl::Status RunScript(std::istream& in);

  void PrintHelp();

  const std::string& session_id() const { return session_id_; }

 private:
  void Print(const ActionResponse& resp);

  Gateway& gateway_;
  std::string session_id_;
  std::ostream& out_;
  bool echo_ = false;
};

}  // namespace streetnav::gateway

#endif  // STREETNAV_GATEWAY_TERMINAL_CLIENT_H_
