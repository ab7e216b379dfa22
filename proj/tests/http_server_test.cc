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

#include <thread>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "streetnav/gateway/actions.h"
#include "streetnav/synthetic.h"

namespace streetnav::gateway {
namespace {

using Json = nlohmann::json;

class HttpServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    GatewayOptions opts;
    opts.clock = &clock_;
    gateway_ = std::make_unique<Gateway>(opts);
    ASSERT_TRUE(gateway_
                    ->RegisterWorld("teleport-demo",
                                    *World::Create(
                                        synthetic::MakeTeleportDemoWorld()))
                    .ok());
    server_ = std::make_unique<HttpServer>(*gateway_);
    auto port = server_->Start("127.0.0.1", 0);
    ASSERT_TRUE(port.ok()) << port.status();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", *port);
  }

  void TearDown() override { server_->Stop(); }

  std::string NewSession(const std::string& extra = "") {
    auto res = client_->Post(
        "/sessions",
        R"({"v":1,"fixture":"teleport-demo","start_pano":"bankside_0","heading":180)" +
            extra + "}",
        "application/json");
    EXPECT_TRUE(res);
    EXPECT_EQ(res->status, 201) << res->body;
    return Json::parse(res->body)["session_id"];
  }

  httplib::Result Act(const std::string& id, const std::string& body) {
    return client_->Post("/sessions/" + id + "/actions", body,
                         "application/json");
  }

  ManualClock clock_{1000, 5};
  std::unique_ptr<Gateway> gateway_;
  std::unique_ptr<HttpServer> server_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpServerTest, Health) {
  auto res = client_->Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const Json j = Json::parse(res->body);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["fixtures"], Json::array({"teleport-demo"}));
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
}

TEST_F(HttpServerTest, CreateActAndRead) {
  const std::string id = NewSession();
  EXPECT_EQ(id, "s1");

  auto res = Act(id, ActionRequestJson(InfoRequest(InfoKind::kWhere)));
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  Json j = Json::parse(res->body);
  EXPECT_EQ(j["messages"][0]["text"],
            "You are at 38 Bankside, Southwark, London, England, facing South.");

  res = Act(id, R"({"v":1,"action":"pan","direction":"right"})");
  ASSERT_EQ(res->status, 200);
  const auto pan_text = Json::parse(res->body)["messages"][0]["text"];

  res = client_->Get("/sessions/" + id + "/events?from=1");
  ASSERT_EQ(res->status, 200);
  j = Json::parse(res->body);
  const auto& items = j["items"];
  ASSERT_EQ(items.size(), 5u);  // start, where (note + message), pan (2)
  EXPECT_EQ(j["next"], 6);
  EXPECT_EQ(items.back()["type"], "message");
  EXPECT_EQ(items.back()["body"]["text"], pan_text);

  res = client_->Get("/sessions/" + id + "/events?from=6");
  EXPECT_TRUE(Json::parse(res->body)["items"].empty());
  EXPECT_EQ(Json::parse(res->body)["next"], 6);

  res = client_->Get("/sessions/" + id + "/state");
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(Json::parse(res->body)["compass"], "Southwest");

  res = client_->Get("/sessions/" + id + "/log");
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(res->body, *gateway_->ExportLog(id));
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/x-ndjson");
}

TEST_F(HttpServerTest, LongPollOverHttp) {
  const std::string id = NewSession();
  const int next = static_cast<int>(gateway_->ReadEvents(id, 1)->size()) + 1;
  httplib::Result polled;
  std::thread reader([&] {
    httplib::Client c2(client_->host(), client_->port());
    polled = c2.Get("/sessions/" + id + "/events?from=" +
                    std::to_string(next) + "&wait_ms=5000");
  });
  std::this_thread::sleep_for(std::chrono::milliseconds(50));
  Act(id, R"({"v":1,"action":"pan","direction":"left"})");
  reader.join();
  ASSERT_TRUE(polled);
  EXPECT_FALSE(Json::parse(polled->body)["items"].empty());
}

TEST_F(HttpServerTest, ErrorStatuses) {
  const std::string id = NewSession();
  auto res = Act(id, R"({"v":1,"action":"fly"})");
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(Json::parse(res->body)["error"]["code"], "INVALID_ARGUMENT");

  res = Act("s42", R"({"v":1,"action":"repeat"})");
  EXPECT_EQ(res->status, 404);
  res = Act("s42", R"({"v":1,"action":"fly"})");
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(client_->Get("/sessions/s42/state")->status, 404);
  EXPECT_EQ(client_->Get("/sessions/s42/events")->status, 404);

  res = client_->Post("/sessions", R"({"v":1,"fixture":"atlantis"})",
                      "application/json");
  EXPECT_EQ(res->status, 404);
  res = client_->Post("/sessions", R"({"v":1,"fixture":7})",
                      "application/json");
  EXPECT_EQ(res->status, 400);
  res = client_->Post(
      "/sessions",
      R"({"v":1,"fixture":"teleport-demo","config":{"pan_increment_deg":"x"}})",
      "application/json");
  EXPECT_EQ(res->status, 400);

  res = client_->Get("/nowhere");
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(Json::parse(res->body)["error"]["code"], "NOT_FOUND");

  EXPECT_EQ(client_->Delete("/sessions/" + id)->status, 200);
  EXPECT_EQ(client_->Get("/sessions/" + id + "/state")->status, 404);
}

TEST_F(HttpServerTest, ConfigOverridesFromTheRequestBody) {
  const std::string id = NewSession(R"(,"config":{"nearby_radius_m":5})");
  auto res = Act(id, ActionRequestJson(InfoRequest(InfoKind::kNearby)));
  ASSERT_EQ(res->status, 200);
  const std::string text = Json::parse(res->body)["messages"][0]["text"];
  EXPECT_NE(text.find("5 meters"), std::string::npos) << text;
}

TEST(ListenAddressTest, Parses) {
  EXPECT_EQ(*ParseListenAddress("0.0.0.0:8080"),
            std::make_pair(std::string("0.0.0.0"), 8080));
  EXPECT_EQ(*ParseListenAddress(":9000"),
            std::make_pair(std::string("127.0.0.1"), 9000));
  EXPECT_EQ(*ParseListenAddress("7000"),
            std::make_pair(std::string("127.0.0.1"), 7000));
  EXPECT_FALSE(ParseListenAddress("host:port").ok());
  EXPECT_FALSE(ParseListenAddress("host:70000").ok());
}

}  // namespace
}  // namespace streetnav::gateway
