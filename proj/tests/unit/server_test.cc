// Copyright 2026 The BitDepth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "bitdepth/study_server.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "serve_process.h"
#include "test_util.h"

namespace bitdepth {
namespace {

using ::bitdepth::testing::ServeProcess;
using ::bitdepth::testing::TempDir;
using json = nlohmann::json;

StudyConfig SmallPlan() {
  const std::string seqs[] = {"clip"};
  const int depths[] = {4, 2};
  StudyConfig c = FullStudyPlan(seqs, 8, depths);  // 7 conditions
  c.training_items = 1;
  return c;
}

json Body(const httplib::Result& r) { return json::parse(r->body); }

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::filesystem::create_directories(dir_.path() / "media" / "clip");
    std::ofstream(dir_ / "media/clip/reference_8.mp4") << "fake clip";
    service_ = std::make_unique<StudyService>(SmallPlan(), dir_ / "log.jsonl");
    server_ = std::make_unique<StudyServer>(*service_, dir_ / "media");
    port_ = server_->Bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_->Run(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_->Stop();
    thread_.join();
  }

  httplib::Result Post(const std::string& path, const json& body) {
    return client_->Post(path.c_str(), body.dump(), "application/json");
  }

  TempDir dir_;
  std::unique_ptr<StudyService> service_;
  std::unique_ptr<StudyServer> server_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(ServerTest, FullSessionOverHttp) {
  auto r = Post("/sessions", {{"participant_id", "p1"}, {"seed", 9}});
  ASSERT_TRUE(r);
  ASSERT_EQ(r->status, 201) << r->body;
  const json created = Body(r);
  const std::string id = created["session_id"];
  EXPECT_EQ(created["total_items"], 8);
  EXPECT_EQ(created["training_items"], 1);
  EXPECT_EQ(created["grey_screen_seconds"], 3.0);
  EXPECT_EQ(created["score_min"], 0.0);
  EXPECT_EQ(created["score_max"], 5.0);
  EXPECT_EQ(created["state"], "training");
  EXPECT_EQ(created["seed"], 9);

  for (int i = 0; i < 8; ++i) {
    r = client_->Get(("/sessions/" + id + "/next").c_str());
    ASSERT_EQ(r->status, 200);
    const json next = Body(r);
    ASSERT_FALSE(next["done"].get<bool>());
    EXPECT_EQ(next["item_id"], i);
    EXPECT_EQ(next["training"], i == 0);
    EXPECT_EQ(next["grey_seconds"], 3.0);
    EXPECT_EQ(next["media"].get<std::string>().rfind("/media/clip/", 0), 0u);
    r = Post("/sessions/" + id + "/ratings", {{"item_id", i}, {"score", 2.5}});
    ASSERT_EQ(r->status, 200) << r->body;
    EXPECT_EQ(Body(r)["cursor"], i + 1);
  }
  r = client_->Get(("/sessions/" + id + "/next").c_str());
  EXPECT_TRUE(Body(r)["done"].get<bool>());
  r = client_->Get("/export");
  ASSERT_EQ(r->status, 200);
  EXPECT_EQ(r->get_header_value("Content-Type"), "text/csv");
  std::istringstream in(r->body);
  EXPECT_EQ(ReadRatings(in).size(), 7u);
}

TEST_F(ServerTest, ErrorsAreStructured) {
  auto r = Post("/sessions", {{"participant_id", "p1"}});
  const std::string id = Body(r)["session_id"];

  r = client_->Get("/sessions/nope/next");
  EXPECT_EQ(r->status, 404);
  EXPECT_EQ(Body(r)["error"], "not_found");

  r = Post("/sessions/" + id + "/ratings", {{"item_id", 0}, {"score", 5.1}});
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(Body(r)["error"], "sample_range");

  r = Post("/sessions/" + id + "/ratings", {{"item_id", 3}, {"score", 3}});
  EXPECT_EQ(r->status, 409);
  EXPECT_EQ(Body(r)["error"], "state");

  r = Post("/sessions/" + id + "/ratings", {{"item_id", 0}, {"score", 3}});
  EXPECT_EQ(r->status, 200);
  r = Post("/sessions/" + id + "/ratings", {{"item_id", 0}, {"score", 3}});
  EXPECT_EQ(r->status, 409);  // stale duplicate

  r = client_->Post(("/sessions/" + id + "/ratings").c_str(), "{oops",
                    "application/json");
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(Body(r)["error"], "format");
  r = Post("/sessions/" + id + "/ratings", {{"score", 3}});
  EXPECT_EQ(r->status, 400);
  r = Post("/sessions", {{"participant_id", ""}});
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(Body(r)["error"], "invalid_argument");
}

TEST_F(ServerTest, ServesMedia) {
  auto r = client_->Get("/media/clip/reference_8.mp4");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(r->body, "fake clip");
  EXPECT_EQ(client_->Get("/media/clip/missing.mp4")->status, 404);
}

TEST(StudyServerConstructionTest, BadMediaRoot) {
  TempDir dir;
  StudyService svc(SmallPlan(), dir / "log.jsonl");
  try {
    StudyServer server(svc, dir / "no_such_dir");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotFound);
  }
}

// Kills the real server process after every acknowledged rating has been
// received, restarts it on the same log and checks nothing was lost.
TEST(ServerDurabilityTest, KillAndRestartLosesNothing) {
  TempDir dir;
  const std::string config = dir / "study.json";
  std::ofstream(config) << SmallPlan().ToJson();
  const std::vector<std::string> args = {"--config", config, "--log",
                                         dir / "log.jsonl"};
  constexpr int kAcks = 11;
  std::vector<std::string> ids;
  {
    ServeProcess proc(BITDEPTH_CLI_PATH, args);
    httplib::Client client("127.0.0.1", proc.port());
    int acks = 0;
    for (int s = 0; acks < kAcks; ++s) {
      auto r = client.Post(
          "/sessions", json{{"participant_id", "p" + std::to_string(s)}}.dump(),
          "application/json");
      ASSERT_TRUE(r);
      ASSERT_EQ(r->status, 201);
      const std::string id = json::parse(r->body)["session_id"];
      ids.push_back(id);
      for (int item = 0; item < 8 && acks < kAcks; ++item) {
        r = client.Post(("/sessions/" + id + "/ratings").c_str(),
                        json{{"item_id", item}, {"score", 1 + item % 4}}.dump(),
                        "application/json");
        ASSERT_EQ(r->status, 200) << r->body;
        ++acks;
      }
    }
    proc.Kill();
  }
  ServeProcess proc(BITDEPTH_CLI_PATH, args);
  httplib::Client client("127.0.0.1", proc.port());
  // First session: 8 items (1 training). Second: 3 acked, all main items.
  auto r = client.Get("/export");
  ASSERT_TRUE(r);
  std::istringstream in(r->body);
  EXPECT_EQ(ReadRatings(in).size(), static_cast<size_t>(kAcks - 2));
  r = client.Get(("/sessions/" + ids[1] + "/next").c_str());
  EXPECT_EQ(json::parse(r->body)["item_id"], 3);
  EXPECT_EQ(proc.Terminate(), 0);
}

}  // namespace
}  // namespace bitdepth
