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


#include "streetnav/prompts.h"

#include "absl/strings/str_cat.h"

namespace streetnav {

namespace {

constexpr char kDescriberFocus[] =
    "Cover these areas when they are visible:\n"
    "1. The main objects in the view.\n"
    "2. Where things are relative to the user: ahead, left, right.\n"
    "3. Sidewalks, paths and the walking surface.\n"
    "4. Crossings, curb ramps, signals and other traffic controls.\n"
    "5. Obstacles or hazards in the walking path.\n"
    "6. Entrances, doors and landmarks useful for orientation.\n"
    "7. Readable signs and storefront text.\n"
    "8. Nearby places from the geographic context that appear in view.\n";

constexpr char kDescriberRules[] =
    "Rules:\n"
    "- Use plain, short sentences.\n"
    "- Describe positions from the user's point of view, using the heading "
    "in the context.\n"
    "- Write in the present tense.\n"
    "- Never guess at details you cannot see.\n";

constexpr char kStructuredSchema[] =
    "Respond with a single JSON object and nothing else:\n"
    "{\"description\": string, \"mobility_features\": [string], "
    "\"obstacles\": [string], \"safety_summary\": string, "
    "\"followups\": [string, string, string]}\n"
    "followups holds exactly three questions the user could ask next.\n";

}  // namespace

const char* DescriberModeName(DescriberMode m) {
  return m == DescriberMode::kDefault ? "default" : "tour_guide";
}

const std::vector<FunctionDeclaration>& ChatFunctionDeclarations() {
  static const std::vector<FunctionDeclaration> kDecls = {
      {"moveBackward", "Step to the adjacent panorama behind the user, "
                       "keeping the current heading."},
      {"moveForward", "Step to the adjacent panorama in the direction the "
                      "user is facing."},
      {"moveToIntersection",
       "Jump ahead to the next intersection, or as far as allowed if none."},
      {"turnLeft45", "Rotate the user 45 degrees counterclockwise."},
      {"turnLeft90", "Rotate the user 90 degrees counterclockwise."},
      {"turnRight45", "Rotate the user 45 degrees clockwise."},
      {"turnRight90", "Rotate the user 90 degrees clockwise."},
      {"turnAround", "Rotate the user 180 degrees to face the opposite way."},
  };
  return kDecls;
}

PromptDocument RenderDescriberPrompt(const GeoContext& ctx,
                                     const UserProfile& profile,
                                     DescriberMode mode, bool structured) {
  std::string system;
  if (mode == DescriberMode::kDefault) {
    absl::StrAppend(
        &system,
        "You describe street scenes for a pedestrian who cannot see them. "
        "The image is what the user is facing in a street-level panorama.\n\n",
        kDescriberFocus, "\n", kDescriberRules,
        "- Keep the description to two or three sentences.\n");
  } else {
    absl::StrAppend(
        &system,
        "You are a tour guide leading a blind or low-vision visitor through "
        "a place they are exploring remotely. The image is what the user is "
        "facing in a street-level panorama.\n\n",
        kDescriberFocus,
        "Then add what a good guide would share: historical background, "
        "cultural significance, architectural style, a short anecdote, "
        "popular attractions nearby and what people in the scene are "
        "doing.\n\n",
        kDescriberRules,
        "- Keep the description to four or five sentences.\n");
  }
  absl::StrAppend(&system, "\nAbout the user: ", profile.PromptClause(), "\n");
  if (structured) absl::StrAppend(&system, "\n", kStructuredSchema);
  return PromptDocument{std::move(system), GeoContextJson(ctx)};
}

std::string RenderChatSystemPrompt(const UserProfile& profile) {
  std::string out =
      "You are a conversational assistant inside a street-level map "
      "explorer. With every change of view you receive the image the user "
      "is facing and a JSON snapshot of nearby places.\n\n"
      "- Answer questions about the current and earlier views and nearby "
      "places.\n"
      "- Give positions relative to the user's current heading and "
      "distances in meters.\n"
      "- When the user asks to move or turn, call the matching function.\n"
      "- Say so when you are unsure.\n\n";
  absl::StrAppend(&out, "About the user: ", profile.PromptClause(), "\n");
  return out;
}

}  // namespace streetnav
