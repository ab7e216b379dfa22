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


// streetnav: play a fixture world from the terminal, serve it over HTTP, or
// export fixtures and generated docs.

#include <termios.h>
#include <unistd.h>

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "streetnav/event_log.h"
#include "streetnav/fixture_io.h"
#include "streetnav/gateway/gateway.h"
#include "streetnav/gateway/http_server.h"
#include "streetnav/gateway/keymap.h"
#include "streetnav/gateway/speech.h"
#include "streetnav/gateway/terminal_client.h"
#include "streetnav/message_catalog.h"
#include "streetnav/mock_provider.h"
#include "streetnav/nav_config.h"
#include "streetnav/synthetic.h"
#include "streetnav/world.h"

namespace {

using streetnav::World;
using streetnav::WorldFixture;
namespace gw = streetnav::gateway;

constexpr char kBuiltinPrefix[] = "builtin:";

int Fail(const std::string& msg) {
  std::cerr << "streetnav: " << msg << "\n";
  return 1;
}

absl::StatusOr<WorldFixture> LoadWorldFixture(const std::string& ref) {
  if (absl::StartsWith(ref, kBuiltinPrefix)) {
    const std::string name = ref.substr(sizeof(kBuiltinPrefix) - 1);
    auto f = streetnav::synthetic::BuiltinWorld(name);
    if (!f) {
      return absl::NotFoundError(
          absl::StrCat("no builtin world \"", name, "\""));
    }
    return *f;
  }
  auto f = streetnav::LoadFixtureFile(ref);
  if (f.ok() && f->meta.name.empty()) {
    f->meta.name = std::filesystem::path(ref).stem().string();
  }
  return f;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The environment wins over the command line for these two settings.
void ApplyEnvironment(std::vector<std::string>& fixtures, std::string& log_dir) {
  if (const char* f = std::getenv("SRAI_FIXTURE"); f != nullptr && *f) {
    fixtures = {f};
  }
  if (const char* d = std::getenv("SRAI_LOG_DIR"); d != nullptr && *d) {
    log_dir = d;
  }
}

class RawTerminal {
 public:
  RawTerminal() {
    if (tcgetattr(STDIN_FILENO, &saved_) != 0) return;
    termios raw = saved_;
    raw.c_lflag &= ~(ICANON | ECHO);
    raw.c_cc[VMIN] = 1;
    raw.c_cc[VTIME] = 0;
    active_ = tcsetattr(STDIN_FILENO, TCSANOW, &raw) == 0;
  }
  ~RawTerminal() { Restore(); }

  void Restore() {
    if (active_) tcsetattr(STDIN_FILENO, TCSANOW, &saved_);
  }
  void Resume() {
    if (!active_) return;
    termios raw = saved_;
    raw.c_lflag &= ~(ICANON | ECHO);
    tcsetattr(STDIN_FILENO, TCSANOW, &raw);
  }

 private:
  termios saved_{};
  bool active_ = false;
};

// Reads one chunk of bytes; a short timeout lets a lone ESC resolve.
std::optional<std::string> ReadBytes(int timeout_ds) {
  termios t;
  tcgetattr(STDIN_FILENO, &t);
  t.c_cc[VMIN] = timeout_ds > 0 ? 0 : 1;
  t.c_cc[VTIME] = static_cast<cc_t>(timeout_ds);
  tcsetattr(STDIN_FILENO, TCSANOW, &t);
  char buf[64];
  const ssize_t n = read(STDIN_FILENO, buf, sizeof(buf));
  if (n < 0) return std::nullopt;
  return std::string(buf, static_cast<size_t>(n));
}

int Interactive(gw::TerminalClient& term) {
  std::cout << "Press ? for keys, q to quit.\n" << std::flush;
  RawTerminal raw;
  gw::KeyDecoder decoder;
  bool escape_pending = false;
  while (true) {
    auto bytes = ReadBytes(escape_pending ? 1 : 0);
    if (!bytes) break;
    std::vector<std::string> keys;
    if (bytes->empty()) {
      keys = decoder.Flush();
    } else {
      keys = decoder.Feed(*bytes);
    }
    escape_pending = !bytes->empty() && bytes->back() == '\x1b' &&
                     keys.empty();
    if (bytes->empty() && keys.empty() && !escape_pending) continue;
    for (const std::string& key : keys) {
      if (key == "Ctrl+C" || key == "Ctrl+D") return 0;
      if (key == "Enter") continue;
      std::string text;
      if (const gw::HotkeyBinding* b = gw::FindBinding(key);
          b != nullptr && b->takes_text) {
        raw.Restore();
        std::cout << (key == "/" ? "search> " : "chat> ") << std::flush;
        std::getline(std::cin, text);
        raw.Resume();
      }
      if (!term.PressKey(key, text)) return 0;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Street-level navigation engine: terminal client and gateway"};
  app.require_subcommand(0, 1);

  std::vector<std::string> fixtures;
  std::string start;
  double heading = 0.0;
  std::string config_path;
  std::string log_path;
  std::string log_dir;
  std::string speech = "off";
  double speech_rate = 1.0;
  std::string script;
  std::string serve;
  bool no_ai = false;
  std::string profile;

  app.add_option("--fixture", fixtures,
                 "World fixture: a JSON file or builtin:<name>. Repeat with "
                 "--serve to host several. Env SRAI_FIXTURE overrides.");
  app.add_option("--start", start, "Starting panorama id");
  app.add_option("--heading", heading, "Starting heading in degrees");
  app.add_option("--config", config_path,
                 "JSON file of navigation config overrides");
  app.add_option("--log", log_path, "Event log file for the session");
  app.add_option("--log-dir", log_dir,
                 "Directory for per-session logs. Env SRAI_LOG_DIR overrides.");
  app.add_option("--speech", speech, "Voicing: off or stream")
      ->check(CLI::IsMember({"off", "stream"}));
  app.add_option("--speech-rate", speech_rate, "Speech rate multiplier")
      ->check(CLI::Range(0.25, 4.0));
  app.add_option("--script", script,
                 "Replay keys from a file instead of the keyboard");
  app.add_option("--serve", serve, "Serve HTTP on ADDR (host:port)");
  app.add_flag("--no-ai", no_ai, "Disable describe and chat");
  app.add_option("--profile", profile,
                 "User profile sentence given to the AI");

  auto* messages = app.add_subcommand("messages", "Print the message catalog");
  auto* rules = app.add_subcommand("mock-rules", "Print the mock model rules");
  auto* config = app.add_subcommand("config", "Print the effective config");
  auto* fixture = app.add_subcommand("fixture", "Fixture utilities");
  fixture->require_subcommand(1);
  std::string export_name;
  auto* fx_export = fixture->add_subcommand("export", "Print a builtin world");
  fx_export->add_option("name", export_name, "Builtin world name")
      ->required();
  std::string check_path;
  auto* fx_check = fixture->add_subcommand("check", "Validate a fixture file");
  fx_check->add_option("path", check_path)->required();
  auto* fx_list = fixture->add_subcommand("list", "List builtin worlds");
  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Replay an event log");
  replay->add_option("path", replay_path)->required();

  CLI11_PARSE(app, argc, argv);
  ApplyEnvironment(fixtures, log_dir);

  streetnav::NavConfig cfg;
  if (!config_path.empty()) {
    auto text = ReadFile(config_path);
    if (!text.ok()) return Fail(std::string(text.status().message()));
    auto parsed = streetnav::NavConfigFromJson(*text);
    if (!parsed.ok()) return Fail(std::string(parsed.status().message()));
    cfg = *parsed;
  }

  if (*messages) {
    std::cout << streetnav::MessageCatalogMarkdown();
    return 0;
  }
  if (*rules) {
    std::cout << streetnav::MockRulesJson(streetnav::DefaultMockRules())
              << "\n";
    return 0;
  }
  if (*config) {
    std::cout << streetnav::NavConfigToJson(cfg) << "\n";
    return 0;
  }
  if (*fx_list) {
    for (const auto& n : streetnav::synthetic::BuiltinWorldNames()) {
      std::cout << n << "\n";
    }
    return 0;
  }
  if (*fx_export) {
    auto f = streetnav::synthetic::BuiltinWorld(export_name);
    if (!f) return Fail(absl::StrCat("no builtin world \"", export_name, "\""));
    std::cout << streetnav::SerializeFixture(*f);
    return 0;
  }
  if (*fx_check) {
    auto f = streetnav::LoadFixtureFile(check_path);
    if (!f.ok()) return Fail(f.status().ToString());
    auto w = World::Create(*std::move(f));
    if (!w.ok()) return Fail(w.status().ToString());
    std::cout << check_path << ": ok, " << (*w)->pano_count()
              << " panoramas\n";
    return 0;
  }
  if (*replay) {
    auto text = ReadFile(replay_path);
    if (!text.ok()) return Fail(std::string(text.status().message()));
    auto events = streetnav::ParseEventLog(*text);
    if (!events.ok()) return Fail(events.status().ToString());
    auto state = streetnav::ReplayEvents(*events, cfg.undo_depth);
    if (!state.ok()) return Fail(state.status().ToString());
    std::cout << events->size() << " events; at " << state->current_pano_id
              << " facing " << streetnav::CompassName(state->heading) << " ("
              << state->heading.degrees() << " degrees), "
              << state->visits.size() << " panoramas visited\n";
    return 0;
  }

  if (fixtures.empty()) fixtures = {"builtin:teleport-demo"};

  std::unique_ptr<gw::SpeechProvider> voice;
  if (speech == "stream") {
    voice = std::make_unique<gw::StreamSpeechProvider>(std::cerr);
    voice->set_rate(speech_rate);
  }
  gw::GatewayOptions opts;
  opts.config = cfg;
  opts.log_dir = log_dir;
  opts.speech = voice.get();
  opts.enable_ai = !no_ai;
  if (!profile.empty()) opts.profile.description = profile;
  gw::Gateway gateway(opts);

  std::vector<std::string> names;
  for (const std::string& ref : fixtures) {
    auto f = LoadWorldFixture(ref);
    if (!f.ok()) return Fail(f.status().ToString());
    const std::string name = f->meta.name;
    auto w = World::Create(*std::move(f));
    if (!w.ok()) return Fail(w.status().ToString());
    if (auto s = gateway.RegisterWorld(name, *w); !s.ok()) {
      return Fail(s.ToString());
    }
    names.push_back(name);
  }

  if (!serve.empty()) {
    auto addr = gw::ParseListenAddress(serve);
    if (!addr.ok()) return Fail(std::string(addr.status().message()));
    gw::HttpServer server(gateway);
    auto port = server.Bind(addr->first, addr->second);
    if (!port.ok()) return Fail(std::string(port.status().message()));
    std::cerr << "streetnav: serving " << absl::StrJoin(names, ", ")
              << " on http://" << addr->first << ":" << *port << "\n";
    auto s = server.Serve();
    return s.ok() ? 0 : Fail(s.ToString());
  }

  gw::SessionSpec spec;
  spec.world = names.front();
  spec.start_pano = start;
  spec.heading_deg = heading;
  if (log_dir.empty()) spec.log_path = log_path;
  auto id = gateway.CreateSession(spec);
  if (!id.ok()) return Fail(id.status().ToString());

  gw::TerminalClient term(gateway, *id, std::cout);
  int rc = 0;
  if (!script.empty()) {
    std::ifstream in(script);
    if (!in) return Fail(absl::StrCat("cannot open ", script));
    term.set_echo(true);
    auto s = term.RunScript(in);
    if (!s.ok()) rc = Fail(s.ToString());
  } else if (isatty(STDIN_FILENO)) {
    rc = Interactive(term);
  } else {
    term.set_echo(true);
    auto s = term.RunScript(std::cin);
    if (!s.ok()) rc = Fail(s.ToString());
  }
  if (auto s = gateway.CloseSession(*id); !s.ok()) rc = Fail(s.ToString());
  return rc;
}
