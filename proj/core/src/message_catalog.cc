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


#include "streetnav/message_catalog.h"

#include <cassert>
#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"

namespace streetnav {

const std::vector<MessageTemplate>& MessageCatalog() {
  static const std::vector<MessageTemplate> kCatalog = {
      {"pan.facing", "Now facing: {heading}."},
      {"pan.forward", "You can move forward to {address}."},
      {"pan.no_forward", "You cannot move forward."},
      {"pan.facing_places", "You are facing {places}."},
      {"pan.facing_item", "{name} {distance} away"},

      {"move.step", "You stepped {direction} {distance}."},
      {"move.jump", "You jumped {distance}."},
      {"move.back", "You went back {distance}."},
      {"move.road", "You are now on {road}."},
      {"move.arrive_intersection",
       "You arrived at the intersection of {roads}."},
      {"move.leave_intersection", "You left the intersection of {roads}."},
      {"move.place_now", "{name} is now {position} {distance} away."},
      {"move.place_still",
       "{name} is still {position} but now {distance} away."},
      {"move.place_gone", "{name} is no longer within {radius}."},
      {"move.visited", "You have been here before."},
      {"move.nothing_to_undo", "There is no previous location to go back to."},

      {"teleport.trip", "You teleported {distance} from {origin} to {destination}."},
      {"teleport.trip_locality",
       "You teleported {distance} from {origin} to {destination} in "
       "{locality}."},
      {"teleport.facing_moves",
       "You are facing {heading} and can move in {count} {noun}: "
       "{directions}."},
      {"teleport.facing_no_moves",
       "You are facing {heading} and cannot move in any direction."},

      {"places.many", "There are {count} places within {radius}, including: "
                      "{groups}."},
      {"places.one", "There is one place within {radius}: {groups}."},
      {"places.none", "There are no places within {radius}."},
      {"places.item", "{article} {type}, {name}"},
      {"places.group_one", "{items}, is {position} {distance} away"},
      {"places.group_many", "{items}, are {position} less than {distance} away"},

      {"moves.blocked",
       "You cannot move {direction} along your current heading of {heading}."},
      {"moves.list", "You can move in {count} {noun}: {directions}."},
      {"moves.none", "You cannot move in any direction."},

      {"where.here", "You are at {address}, facing {heading}."},

      {"visits.first", "This is your first visit to this location."},
      {"visits.repeat",
       "You have visited this location {count} times. Your previous visit "
       "was {ago} ago."},

      {"intersection.current", "You are at the intersection of {roads}."},
      {"intersection.not_here", "You are not at an intersection."},
      {"intersection.next",
       "The next intersection ahead is {roads}, {distance} away."},
      {"intersection.none_ahead", "No intersection within {max} ahead."},

      {"photo.taken",
       "This Street View image was taken on {date} by {photographer}."},
      {"photo.unknown_photographer", "an unknown photographer"},

      {"repeat.empty", "There is nothing to repeat."},

      {"describe.unavailable", "AI descriptions are not available."},
      {"describe.failed",
       "The description could not be generated. Please try again."},
      {"chat.opened", "Chat is open. Ask a question or give a command."},
      {"chat.already_open", "Chat is already open."},
      {"chat.closed", "Chat closed."},
      {"chat.not_open", "Chat is not open."},
      {"chat.unavailable", "AI chat is not available."},
      {"chat.failed", "The AI chat did not respond. Please try again."},
  };
  return kCatalog;
}

std::string RenderMessage(const std::string& id, const MessageArgs& args) {
  for (const MessageTemplate& t : MessageCatalog()) {
    if (id != t.id) continue;
    std::vector<std::pair<std::string, std::string>> repl;
    repl.reserve(args.size());
    for (const auto& [k, v] : args) repl.emplace_back(absl::StrCat("{", k, "}"), v);
    // Single pass so substituted values containing braces are left alone.
    return absl::StrReplaceAll(t.pattern, repl);
  }
  assert(false && "unknown message id");
  std::abort();
}

std::string MessageCatalogMarkdown() {
  std::string out =
      "# Message catalog\n\n"
      "Generated by `streetnav messages`. Placeholders are written `{name}`.\n\n"
      "| id | template |\n|---|---|\n";
  for (const MessageTemplate& t : MessageCatalog()) {
    absl::StrAppend(&out, "| `", t.id, "` | ",
                    absl::StrReplaceAll(t.pattern, {{"|", "\\|"}}), " |\n");
  }
  return out;
}

}  // namespace streetnav
