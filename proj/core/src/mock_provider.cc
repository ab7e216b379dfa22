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


#include "streetnav/mock_provider.h"

#include <algorithm>
#include <optional>
#include <regex>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_replace.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "streetnav/announcer.h"

namespace streetnav {

namespace {

using Json = nlohmann::json;

// Lowercase, anything but letters and digits becomes a space, runs of
// spaces collapse.
std::string Clean(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool space = true;
  for (char c : text) {
    if (absl::ascii_isalnum(static_cast<unsigned char>(c))) {
      out.push_back(absl::ascii_tolower(static_cast<unsigned char>(c)));
      space = false;
    } else if (!space) {
      out.push_back(' ');
      space = true;
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string Singular(const std::string& w) {
  auto ends = [&w](const char* s) { return absl::EndsWith(w, s); };
  if (w.size() <= 3) return w;
  if (ends("ss") || ends("us") || ends("is")) return w;
  if (ends("ches") || ends("shes") || ends("xes") || ends("sses")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends("s")) return w.substr(0, w.size() - 1);
  return w;
}

std::string TagPhrase(const std::string& tag) {
  return absl::StrReplaceAll(tag, {{"_", " "}});
}

std::string WithArticle(const std::string& noun) {
  const char c = noun.empty() ? 'x' : noun[0];
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return absl::StrCat(vowel ? "an " : "a ", noun);
}

const char* Where(RelativePosition p) {
  switch (p) {
    case RelativePosition::kInFront:
      return "in front of you";
    case RelativePosition::kToYourRight:
      return "to your right";
    case RelativePosition::kBehind:
      return "behind you";
    case RelativePosition::kToYourLeft:
      return "to your left";
  }
  return "in front of you";
}

RelativePosition PositionFromName(const std::string& name) {
  for (RelativePosition p :
       {RelativePosition::kInFront, RelativePosition::kToYourRight,
        RelativePosition::kBehind, RelativePosition::kToYourLeft}) {
    if (name == RelativePositionName(p)) return p;
  }
  return RelativePosition::kInFront;
}

struct ScenePlace {
  std::string name;
  std::string type;
  std::optional<std::string> summary;
  double distance_m = 0.0;
  RelativePosition position = RelativePosition::kInFront;
};

struct Scene {
  ViewCapture view;
  OctantViews views;
  std::string compass;
  std::string address;
  std::vector<std::string> locality;
  std::vector<ScenePlace> places;
};

std::string OptString(const Json& j, const char* key) {
  auto it = j.find(key);
  return it != j.end() && it->is_string() ? it->get<std::string>() : "";
}

absl::StatusOr<Scene> LoadScene(const ImageryProvider* vision,
                                const ViewCapture& view,
                                const std::string& context_json) {
  Scene s;
  s.view = view;
  for (int o = 0; o < 8; ++o) {
    auto v = vision->GetView(view.pano_id, o);
    if (!v.ok()) return v.status();
    s.views[o] = *std::move(v);
  }
  try {
    const Json j = Json::parse(context_json);
    s.compass = OptString(j, "compass");
    s.address = OptString(j, "closest_address");
    for (const char* key : {"neighborhood", "city", "country"}) {
      if (std::string v = OptString(j, key); !v.empty()) {
        s.locality.push_back(v);
      }
    }
    for (const Json& p : j.at("nearby_places")) {
      ScenePlace sp;
      sp.name = p.at("name").get<std::string>();
      sp.type = p.at("type").get<std::string>();
      if (std::string v = OptString(p, "editorial_summary"); !v.empty()) {
        sp.summary = v;
      }
      sp.distance_m = p.at("distance_m").get<double>();
      sp.position = PositionFromName(p.at("relative_position").get<std::string>());
      s.places.push_back(std::move(sp));
    }
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("unreadable geographic context: ", e.what()));
  }
  return s;
}

bool ContainsWords(const std::string& haystack, const std::string& needle) {
  return absl::StrCat(" ", haystack, " ").find(absl::StrCat(" ", needle, " ")) !=
         std::string::npos;
}

class Answerer {
 public:
  explicit Answerer(const MockRuleTable& rules) : rules_(rules) {}

  // Phrases `noun` may refer to: itself plus its synonyms.
  std::vector<std::string> Aliases(const std::string& noun) const {
    std::vector<std::string> out = {noun};
    for (const auto& [from, to] : rules_.synonyms) {
      if (from == noun) out.push_back(to);
    }
    return out;
  }

  std::vector<std::string> MatchingTags(const Scene& s,
                                        const std::string& noun) const {
    std::vector<std::string> out;
    const auto aliases = Aliases(noun);
    for (const ViewDescriptor& v : s.views) {
      for (const std::string& tag : v.tags) {
        const std::string phrase = NormalizePhrase(TagPhrase(tag));
        if (std::find(aliases.begin(), aliases.end(), phrase) !=
                aliases.end() &&
            std::find(out.begin(), out.end(), tag) == out.end()) {
          out.push_back(tag);
        }
      }
    }
    return out;
  }

  std::vector<const ScenePlace*> MatchingPlaces(const Scene& s,
                                                const std::string& noun) const {
    std::vector<const ScenePlace*> out;
    const auto aliases = Aliases(noun);
    for (const ScenePlace& p : s.places) {
      const std::string type = NormalizePhrase(TagPhrase(p.type));
      const std::string name = NormalizePhrase(p.name);
      bool hit = ContainsWords(noun, name);
      for (const std::string& a : aliases) {
        hit = hit || ContainsWords(type, a) || ContainsWords(name, a);
      }
      if (hit) out.push_back(&p);
    }
    return out;
  }

  static std::vector<RelativePosition> TagPositions(const Scene& s,
                                                    const std::string& tag) {
    std::vector<bool> seen(4, false);
    for (int o = 0; o < 8; ++o) {
      const auto& tags = s.views[o].tags;
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) continue;
      const double off = RelativeHeading(Heading::FromOctant(o), s.view.heading);
      seen[static_cast<int>(RelativePositionOf(off))] = true;
    }
    std::vector<RelativePosition> out;
    for (int i = 0; i < 4; ++i) {
      if (seen[i]) out.push_back(static_cast<RelativePosition>(i));
    }
    return out;
  }

  std::string Lookup(const Scene& s, const std::string& noun,
                     bool existence) const {
    std::vector<std::string> sentences;
    for (const std::string& tag : MatchingTags(s, noun)) {
      std::vector<std::string> where;
      for (RelativePosition p : TagPositions(s, tag)) where.push_back(Where(p));
      sentences.push_back(absl::StrCat("I can see ", WithArticle(TagPhrase(tag)),
                                       " ", JoinEnglish(where), "."));
    }
    for (const ScenePlace* p : MatchingPlaces(s, noun)) {
      sentences.push_back(absl::StrCat(p->name, " is ", Where(p->position), ", ",
                                       FormatDistance(p->distance_m),
                                       " away."));
    }
    if (sentences.empty()) {
      return existence
                 ? absl::StrCat("No, I do not see ", WithArticle(noun), " here.")
                 : absl::StrCat("I do not see ", WithArticle(noun), " nearby.");
    }
    const std::string body = absl::StrJoin(sentences, " ");
    return existence ? absl::StrCat("Yes. ", body) : body;
  }

  std::string Nearby(const Scene& s) const {
    if (s.places.empty()) return "I do not know of any places nearby.";
    std::vector<std::string> items;
    for (const ScenePlace& p : s.places) {
      items.push_back(absl::StrCat(p.name, " ", Where(p.position), ", ",
                                   FormatDistance(p.distance_m)));
    }
    return absl::StrCat("Nearby: ", absl::StrJoin(items, "; "), ".");
  }

  std::vector<std::string> ViewTags(const Scene& s) const {
    return s.views[s.view.heading.NearestOctant()].tags;
  }

  std::string Describe(const Scene& s, DescriberMode mode) const {
    std::vector<std::string> out;
    out.push_back(s.address.empty()
                      ? absl::StrCat("You are facing ", s.compass, ".")
                      : absl::StrCat("You are facing ", s.compass, " on ",
                                     s.address, "."));
    std::vector<std::string> items;
    for (const std::string& t : ViewTags(s)) {
      items.push_back(WithArticle(TagPhrase(t)));
    }
    out.push_back(items.empty()
                      ? "It is a plain street scene with nothing notable in "
                        "view."
                      : absl::StrCat("In view there is ", JoinEnglish(items),
                                     "."));
    const ScenePlace* ahead = nullptr;
    for (const ScenePlace& p : s.places) {
      if (p.position == RelativePosition::kInFront) {
        ahead = &p;
        break;
      }
    }
    if (mode == DescriberMode::kDefault) {
      if (ahead != nullptr) {
        out.push_back(absl::StrCat(ahead->name, " is ahead, ",
                                   FormatDistance(ahead->distance_m), " away."));
      }
      return absl::StrJoin(out, " ");
    }
    if (!s.locality.empty()) {
      out.push_back(
          absl::StrCat("You are in ", absl::StrJoin(s.locality, ", "), "."));
    }
    if (!s.places.empty()) {
      const ScenePlace& p = s.places.front();
      out.push_back(absl::StrCat(p.name, " is ", Where(p.position), ", ",
                                 FormatDistance(p.distance_m), " away."));
      if (p.summary.has_value()) out.push_back(*p.summary);
    }
    return absl::StrJoin(out, " ");
  }

  std::string Structured(const Scene& s, DescriberMode mode) const {
    const auto tags = ViewTags(s);
    auto pick = [&tags](const std::vector<std::string>& set) {
      Json arr = Json::array();
      for (const std::string& t : tags) {
        if (std::find(set.begin(), set.end(), t) != set.end()) {
          arr.push_back(TagPhrase(t));
        }
      }
      return arr;
    };
    Json j;
    j["description"] = Describe(s, mode);
    j["mobility_features"] = pick(rules_.mobility_tags);
    j["obstacles"] = pick(rules_.obstacle_tags);
    const Json& obstacles = j["obstacles"];
    if (obstacles.empty()) {
      j["safety_summary"] = "No obstacles are visible in the walking path.";
    } else {
      std::vector<std::string> names;
      for (const Json& o : obstacles) names.push_back(o.get<std::string>());
      j["safety_summary"] =
          absl::StrCat("Watch for ", JoinEnglish(names), " near the path.");
    }
    Json followups = Json::array();
    followups.push_back(
        obstacles.empty()
            ? "Is there a crosswalk nearby?"
            : absl::StrCat("How do I get around the ",
                           obstacles.front().get<std::string>(), "?"));
    followups.push_back(s.places.empty()
                            ? "What is behind me?"
                            : absl::StrCat("Where is ", s.places.front().name,
                                           "?"));
    followups.push_back("What does the sidewalk look like?");
    j["followups"] = std::move(followups);
    return j.dump();
  }

 private:
  const MockRuleTable& rules_;
};

const std::regex& ExistenceRe() {
  static const std::regex re(
      "^(?:is|are) there (.+)$|^(?:do|can) you see (.+)$");
  return re;
}
const std::regex& LocationRe() {
  static const std::regex re(
      "^where (?:is|are) (.+)$|^how far (?:away )?(?:is|are) (.+)$");
  return re;
}
const std::regex& NearbyRe() {
  static const std::regex re(
      "^what (?:places|buildings|businesses|is|s) (?:are )?(?:nearby|around|"
      "close)");
  return re;
}
const std::regex& DescribeRe() {
  static const std::regex re(
      "^(?:what (?:am i|are we) (?:looking at|facing)|what do you see|"
      "describe|what (?:is|s) in front of me)");
  return re;
}

// Drops articles and trailing qualifiers, then normalizes.
std::string NounOf(const std::string& captured) {
  static const std::regex lead("^(?:a|an|any|some|the) ");
  static const std::regex tail(
      " (?:nearby|near me|near here|here|around here|around|close by|out "
      "front|in front|in view|to sit on|on this street|in the area|"
      "anywhere|from here|away)$");
  std::string s = std::regex_replace(captured, lead, "");
  for (std::string prev; prev != s;) {
    prev = s;
    s = std::regex_replace(s, tail, "");
  }
  return NormalizePhrase(s);
}

std::string FirstGroup(const std::smatch& m) {
  for (size_t i = 1; i < m.size(); ++i) {
    if (m[i].matched) return m[i].str();
  }
  return "";
}

class MockChatChannel final : public ChatChannel {
 public:
  MockChatChannel(const ImageryProvider* vision, const MockRuleTable& rules)
      : vision_(vision), rules_(rules) {}

  absl::Status Send(const std::vector<ContextPart>& parts) override {
    if (closed_) return absl::FailedPreconditionError("chat is closed");
    for (const ContextPart& p : parts) {
      if (!p.view.has_value()) continue;
      auto scene = LoadScene(vision_, *p.view, p.text);
      if (!scene.ok()) return scene.status();
      scene_ = *std::move(scene);
    }
    return absl::OkStatus();
  }

  absl::StatusOr<ModelReply> Turn(const std::string& input) override {
    if (closed_) return absl::FailedPreconditionError("chat is closed");
    const std::string clean = Clean(input);
    Answerer answer(rules_);
    std::smatch m;
    ModelReply reply;
    if (std::regex_search(clean, m, ExistenceRe())) {
      if (!scene_) return NoView();
      reply.text = answer.Lookup(*scene_, NounOf(FirstGroup(m)), true);
    } else if (std::regex_search(clean, m, LocationRe())) {
      if (!scene_) return NoView();
      reply.text = answer.Lookup(*scene_, NounOf(FirstGroup(m)), false);
    } else if (std::regex_search(clean, m, NearbyRe())) {
      if (!scene_) return NoView();
      reply.text = answer.Nearby(*scene_);
    } else if (std::regex_search(clean, m, DescribeRe())) {
      if (!scene_) return NoView();
      reply.text = answer.Describe(*scene_, DescriberMode::kDefault);
    } else {
      std::vector<std::string> said;
      for (const std::string& fn : MatchCommands(rules_, input)) {
        reply.calls.push_back(FunctionCall{fn});
        for (const MockCommandRule& r : rules_.commands) {
          if (r.function == fn) {
            said.push_back(r.reply);
            break;
          }
        }
      }
      reply.text = said.empty()
                       ? "I can tell you what is in view or nearby, and I can "
                         "turn or move you."
                       : absl::StrJoin(said, " ");
    }
    return reply;
  }

  void Close() override { closed_ = true; }

 private:
  static ModelReply NoView() {
    return ModelReply{"I have not received a view yet.", {}};
  }

  const ImageryProvider* vision_;
  const MockRuleTable& rules_;
  std::optional<Scene> scene_;
  bool closed_ = false;
};

}  // namespace

std::string NormalizePhrase(const std::string& text) {
  std::vector<std::string> words = absl::StrSplit(Clean(text), ' ',
                                                  absl::SkipEmpty());
  for (std::string& w : words) w = Singular(w);
  return absl::StrJoin(words, " ");
}

std::vector<std::string> SplitUtterance(const std::string& utterance) {
  static const std::regex sep(" *(?:,|\\band then\\b|\\bthen\\b|\\band\\b) *");
  std::string lowered = absl::AsciiStrToLower(utterance);
  std::vector<std::string> out;
  std::sregex_token_iterator it(lowered.begin(), lowered.end(), sep, -1), end;
  for (; it != end; ++it) {
    std::string c = Clean(it->str());
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::string> MatchCommands(const MockRuleTable& rules,
                                       const std::string& utterance) {
  std::vector<std::string> out;
  for (const std::string& clause : SplitUtterance(utterance)) {
    for (const MockCommandRule& r : rules.commands) {
      if (std::regex_search(clause, std::regex(r.pattern))) {
        out.push_back(r.function);
        break;
      }
    }
  }
  return out;
}

const MockRuleTable& DefaultMockRules() {
  static const MockRuleTable kRules = [] {
    MockRuleTable t;
    t.version = 1;
    t.commands = {
        {"\\b(?:turn|spin|rotate) (?:me )?around\\b|\\bface the other way\\b|"
         "\\bturn (?:me )?180\\b|\\bu turn\\b",
         "turnAround", "Turning around."},
        {"\\b(?:turn|rotate|look) (?:me )?(?:to the )?left (?:a little|a bit|"
         "slightly|45)\\b|\\b(?:turn|rotate) (?:me )?(?:a little|a bit|"
         "slightly) (?:to the )?left\\b",
         "turnLeft45", "Turning left 45 degrees."},
        {"\\b(?:turn|rotate|look) (?:me )?(?:to the )?right (?:a little|a bit|"
         "slightly|45)\\b|\\b(?:turn|rotate) (?:me )?(?:a little|a bit|"
         "slightly) (?:to the )?right\\b",
         "turnRight45", "Turning right 45 degrees."},
        {"\\b(?:turn|rotate|look) (?:me )?(?:to the |to my )?left\\b",
         "turnLeft90", "Turning left 90 degrees."},
        {"\\b(?:turn|rotate|look) (?:me )?(?:to the |to my )?right\\b",
         "turnRight90", "Turning right 90 degrees."},
        {"\\b(?:jump|go|move|take me|walk|head)(?: me)?(?: ahead)? to the "
         "(?:next )?(?:intersection|corner|crossing)\\b|^jump(?: ahead| "
         "forward)?$",
         "moveToIntersection", "Jumping to the next intersection."},
        {"\\b(?:move|go|walk|step) (?:me )?(?:backward|backwards|back)\\b",
         "moveBackward", "Moving backward."},
        {"\\b(?:move|go|walk|step|keep going) (?:me )?(?:forward|forwards|"
         "ahead|straight)\\b|^(?:go|walk) on$",
         "moveForward", "Moving forward."},
    };
    t.synonyms = {
        {"bus stop", "bus shelter"},   {"bus stop", "bus station"},
        {"trash can", "garbage can"},  {"bin", "garbage can"},
        {"seat", "bench"},             {"bike stand", "bike rack"},
        {"bicycle rack", "bike rack"}, {"crossing", "crosswalk"},
        {"traffic signal", "traffic light"},
        {"step", "stair"},             {"hydrant", "fire hydrant"},
        {"car", "parked car"},         {"parking", "parking lot"},
        {"parking lot", "parking"},    {"ground cover", "grass"},
        {"ground cover", "wood chip"}, {"painting", "mural"},
        {"swing set", "swing"},
        {"play structure", "climbing structure"},
    };
    t.mobility_tags = {"sidewalk", "crosswalk", "curb_ramp", "traffic_light",
                       "stairs",   "bus_shelter", "bench"};
    t.obstacle_tags = {"pole",   "fire_hydrant", "garbage_can",
                       "parked_car", "construction", "tree", "outdoor_seating"};
    return t;
  }();
  return kRules;
}

std::string MockRulesJson(const MockRuleTable& rules) {
  nlohmann::ordered_json j;
  j["version"] = rules.version;
  j["commands"] = nlohmann::ordered_json::array();
  for (const MockCommandRule& r : rules.commands) {
    j["commands"].push_back(
        {{"pattern", r.pattern}, {"function", r.function}, {"reply", r.reply}});
  }
  j["synonyms"] = nlohmann::ordered_json::array();
  for (const auto& [from, to] : rules.synonyms) {
    j["synonyms"].push_back({{"phrase", from}, {"means", to}});
  }
  j["mobility_tags"] = rules.mobility_tags;
  j["obstacle_tags"] = rules.obstacle_tags;
  return j.dump(2);
}

MockModelProvider::MockModelProvider(const ImageryProvider* vision,
                                     MockRuleTable rules)
    : vision_(vision), rules_(std::move(rules)) {}

absl::StatusOr<std::string> MockModelProvider::Describe(
    const DescribeRequest& req) {
  auto scene = LoadScene(vision_, req.view, req.prompt.context);
  if (!scene.ok()) return scene.status();
  Answerer answer(rules_);
  return req.structured ? answer.Structured(*scene, req.mode)
                        : answer.Describe(*scene, req.mode);
}

absl::StatusOr<std::unique_ptr<ChatChannel>> MockModelProvider::OpenChat(
    const std::string& system_prompt,
    const std::vector<FunctionDeclaration>& declarations) {
  (void)system_prompt;
  (void)declarations;
  return std::unique_ptr<ChatChannel>(new MockChatChannel(vision_, rules_));
}

}  // namespace streetnav
