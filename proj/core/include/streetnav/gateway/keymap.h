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


#ifndef STREETNAV_GATEWAY_KEYMAP_H_
#define STREETNAV_GATEWAY_KEYMAP_H_

#include <optional>
#include <string>
#include <vector>

#include "streetnav/gateway/actions.h"

namespace streetnav::gateway {

struct HotkeyBinding {
  std::string key;  // canonical name, e.g. "Left", "Alt+B", "Esc", "/"
  std::string description;
  ActionRequest request;
  // The key asks for text first (search query or chat input) and puts it
  // in the request.
  bool takes_text = false;
  // False for the keys that stand in for the web client's search box,
  // buttons and chat panel.
  bool in_hotkey_table = true;
};

// Every binding, hotkey table rows first, in table order.
const std::vector<HotkeyBinding>& HotkeyBindings();
const HotkeyBinding* FindBinding(const std::string& key);

// The request a key issues, with `text` filled in where the key takes text.
std::optional<ActionRequest> RequestForKey(const std::string& key,
                                           const std::string& text = "");

// Accepts loose spellings ("alt+b", "ALT-b", "escape", "left arrow",
// "alt+spacebar") and returns the canonical name. Unrecognized input is
// returned unchanged.
std::string CanonicalKeyName(const std::string& key);

// Help text listing each binding on its own line.
std::string KeymapHelp();

// Turns raw terminal bytes into canonical key names. Arrow keys arrive as
// CSI or SS3 sequences, Alt+<c> as ESC followed by <c>. A lone ESC stays
// pending until more bytes arrive or Flush() is called.
class KeyDecoder {
 public:
  std::vector<std::string> Feed(const std::string& bytes);
  std::vector<std::string> Flush();

 private:
  std::string pending_;
};

}  // namespace streetnav::gateway

#endif  // STREETNAV_GATEWAY_KEYMAP_H_
