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


#include "streetnav/gateway/http_server.h"

#include <algorithm>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "json.hpp"

namespace streetnav::gateway {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxWaitMs = 30000;
constexpr char kJson[] = "application/json";

void Reply(httplib::Response& res, int status, const std::string& body,
           const char* type = kJson) {
  res.status = status;
  res.set_content(body, type);
}

void ReplyError(httplib::Response& res, const absl::Status& s) {
  Reply(res, HttpStatusFor(s), ErrorJson(s));
}

absl::StatusOr<SessionSpec> ParseSessionSpec(const std::string& body) {
  SessionSpec spec;
  if (body.empty()) return spec;
  const auto j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("request is not a JSON object");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const auto& v = it.value();
    if (k == "v") {
      if (!v.is_number_integer() || v.get<int>() != kApiVersion) {
        return absl::InvalidArgumentError(
            absl::StrCat("v: expected ", kApiVersion));
      }
    } else if (k == "fixture" || k == "start_pano") {
      if (!v.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat(k, ": expected a string"));
      }
      (k == "fixture" ? spec.world : spec.start_pano) = v.get<std::string>();
    } else if (k == "heading") {
      if (!v.is_number()) {
        return absl::InvalidArgumentError("heading: expected a number");
      }
      spec.heading_deg = v.get<double>();
    } else if (k == "config") {
      if (!v.is_object()) {
        return absl::InvalidArgumentError("config: expected an object");
      }
      spec.config_overrides = v.dump();
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat(k, ": not a session field"));
    }
  }
  return spec;
}

uint64_t QueryNumber(const httplib::Request& req, const char* key,
                     uint64_t fallback) {
  if (!req.has_param(key)) return fallback;
  uint64_t v = 0;
  return absl::SimpleAtoi(req.get_param_value(key), &v) ? v : fallback;
}

}  // namespace

absl::StatusOr<std::pair<std::string, int>> ParseListenAddress(
    const std::string& addr) {
  std::string host = "127.0.0.1";
  std::string port_text = addr;
  if (auto colon = addr.rfind(':'); colon != std::string::npos) {
    if (colon > 0) host = addr.substr(0, colon);
    port_text = addr.substr(colon + 1);
  }
  int port = 0;
  if (!absl::SimpleAtoi(port_text, &port) || port < 0 || port > 65535) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad listen address \"", addr, "\""));
  }
  return std::make_pair(host, port);
}

struct HttpServer::Impl {
  Gateway& gateway;
  httplib::Server server;
  std::thread thread;
  bool bound = false;

  explicit Impl(Gateway& g) : gateway(g) { Routes(); }

  void Routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });

    server.Get("/health", [this](const httplib::Request&,
                                 httplib::Response& res) {
      Json j;
      j["v"] = kApiVersion;
      j["status"] = "ok";
      j["fixtures"] = gateway.WorldNames();
      j["self_voicing"] = gateway.self_voicing();
      Reply(res, 200, j.dump());
    });

    server.Post("/sessions", [this](const httplib::Request& req,
                                    httplib::Response& res) {
      auto spec = ParseSessionSpec(req.body);
      if (!spec.ok()) return ReplyError(res, spec.status());
      auto id = gateway.CreateSession(*spec);
      if (!id.ok()) return ReplyError(res, id.status());
      auto state = gateway.StateJson(*id);
      if (!state.ok()) return ReplyError(res, state.status());
      Json j;
      j["v"] = kApiVersion;
      j["session_id"] = *id;
      j["state"] = Json::parse(*state);
      Reply(res, 201, j.dump());
    });

    server.Delete(R"(/sessions/([^/]+))", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
      const std::string id = req.matches[1];
      if (auto s = gateway.CloseSession(id); !s.ok()) {
        return ReplyError(res, s);
      }
      Json j;
      j["v"] = kApiVersion;
      j["closed"] = id;
      Reply(res, 200, j.dump());
    });

    server.Post(R"(/sessions/([^/]+)/actions)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  const std::string id = req.matches[1];
                  auto action = ParseActionRequest(req.body);
                  if (!action.ok()) {
                    // An unknown session outranks a bad body.
                    if (auto st = gateway.StateJson(id); !st.ok()) {
                      return ReplyError(res, st.status());
                    }
                    return ReplyError(res, action.status());
                  }
                  auto resp = gateway.HandleAction(id, *action);
                  if (!resp.ok()) return ReplyError(res, resp.status());
                  Reply(res, 200, ActionResponseJson(*resp));
                });

    server.Get(R"(/sessions/([^/]+)/events)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 const std::string id = req.matches[1];
                 const uint64_t from = QueryNumber(req, "from", 1);
                 const int wait = static_cast<int>(std::min<uint64_t>(
                     QueryNumber(req, "wait_ms", 0), kMaxWaitMs));
                 auto items = gateway.ReadEvents(id, from, wait);
                 if (!items.ok()) return ReplyError(res, items.status());
                 std::string body =
                     absl::StrCat("{\"v\":", kApiVersion, ",\"items\":[");
                 uint64_t next = std::max<uint64_t>(from, 1);
                 for (size_t i = 0; i < items->size(); ++i) {
                   if (i > 0) body += ",";
                   body += StreamItemJson((*items)[i]);
                   next = (*items)[i].seq + 1;
                 }
                 absl::StrAppend(&body, "],\"next\":", next, "}");
                 Reply(res, 200, body);
               });

    server.Get(R"(/sessions/([^/]+)/state)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 auto state = gateway.StateJson(req.matches[1]);
                 if (!state.ok()) return ReplyError(res, state.status());
                 Reply(res, 200, *state);
               });

    server.Get(R"(/sessions/([^/]+)/log)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 auto log = gateway.ExportLog(req.matches[1]);
                 if (!log.ok()) return ReplyError(res, log.status());
                 Reply(res, 200, *log, "application/x-ndjson");
               });

    server.set_error_handler([](const httplib::Request& req,
                                httplib::Response& res) {
      if (!res.body.empty()) return;
      if (res.status == 404) {
        res.set_content(ErrorJson(absl::NotFoundError(
                            absl::StrCat("no route for ", req.method, " ",
                                         req.path))),
                        kJson);
      }
    });
  }
};

HttpServer::HttpServer(Gateway& gateway)
    : impl_(std::make_unique<Impl>(gateway)) {}

HttpServer::~HttpServer() { Stop(); }

absl::StatusOr<int> HttpServer::Bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) {
    return absl::UnavailableError(
        absl::StrCat("cannot listen on ", host, ":", port));
  }
  impl_->bound = true;
  return bound;
}

absl::Status HttpServer::Serve() {
  if (!impl_->bound) return absl::FailedPreconditionError("not bound");
  if (!impl_->server.listen_after_bind()) {
    return absl::InternalError("server stopped with an error");
  }
  return absl::OkStatus();
}

absl::StatusOr<int> HttpServer::Start(const std::string& host, int port) {
  auto bound = Bind(host, port);
  if (!bound.ok()) return bound;
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void HttpServer::Stop() {
  if (impl_ == nullptr) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace streetnav::gateway
