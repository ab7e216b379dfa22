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


#ifndef STREETNAV_GATEWAY_HTTP_SERVER_H_
#define STREETNAV_GATEWAY_HTTP_SERVER_H_

#include <memory>
#include <string>
#include <utility>

#include "absl/status/statusor.h"
#include "streetnav/gateway/gateway.h"

namespace streetnav::gateway {

// "host:port", ":port" or "port". The host defaults to 127.0.0.1.
absl::StatusOr<std::pair<std::string, int>> ParseListenAddress(
    const std::string& addr);

// JSON over HTTP in front of a Gateway. Routes are listed in docs/api.md.
class HttpServer {
 public:
  explicit HttpServer(Gateway& gateway);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds and returns the port; port 0 picks a free one.
  absl::StatusOr<int> Bind(const std::string& host, int port);
  // Serves on the bound socket until Stop(). Blocks.
  absl::Status Serve();
  // Bind and serve on a background thread. Returns once accepting.
  absl::StatusOr<int> Start(const std::string& host, int port);
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace streetnav::gateway

#endif  // STREETNAV_GATEWAY_HTTP_SERVER_H_
