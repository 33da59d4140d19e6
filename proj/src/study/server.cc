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

#include "bitdepth/study_server.h"

#include <optional>
#include <string>

#include "bitdepth/error.h"
#include "httplib.h"
#include "json.hpp"

namespace bitdepth {
namespace {

using json = nlohmann::ordered_json;

constexpr char kJson[] = "application/json";

int StatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotFound:
      return 404;
    case ErrorKind::kState:
      return 409;
    case ErrorKind::kIo:
      return 500;
    default:
      return 400;
  }
}

void Reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump() + "\n", kJson);
}

void ReplyError(httplib::Response& res, const Error& e) {
  Reply(res, StatusFor(e.kind()),
        {{"error", ErrorKindName(e.kind())}, {"message", e.what()}});
}

json ParseBody(const httplib::Request& req) {
  json j = json::parse(req.body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorKind::kFormat, "request body must be a JSON object");
  }
  return j;
}

template <typename T>
T Field(const json& j, const char* name) {
  if (!j.contains(name)) {
    throw Error(ErrorKind::kFormat, std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::kFormat, std::string("bad field '") + name + "'");
  }
}

// Wraps a handler so library errors become structured responses.
template <typename F>
httplib::Server::Handler Guard(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      ReplyError(res, e);
    } catch (const std::exception& e) {
      Reply(res, 500, {{"error", "internal"}, {"message", e.what()}});
    }
  };
}

}  // namespace

struct StudyServer::Impl {
  StudyService& service;
  httplib::Server http;
  explicit Impl(StudyService& s) : service(s) {}
};

StudyServer::StudyServer(StudyService& service, const std::string& media_root)
    : impl_(std::make_unique<Impl>(service)) {
  httplib::Server& http = impl_->http;
  StudyService& svc = impl_->service;

  if (!media_root.empty() && !http.set_mount_point("/media", media_root)) {
    throw Error(ErrorKind::kNotFound,
                "media root '" + media_root + "' is not a directory");
  }

  http.Post("/sessions", Guard([&svc](const httplib::Request& req,
                                      httplib::Response& res) {
    const json body = ParseBody(req);
    const auto participant = Field<std::string>(body, "participant_id");
    std::optional<uint64_t> seed;
    if (body.contains("seed") && !body["seed"].is_null()) {
      seed = Field<uint64_t>(body, "seed");
    }
    const Session s = svc.CreateSession(participant, seed);
    const StudyConfig& cfg = svc.config();
    Reply(res, 201,
          {{"session_id", s.session_id},
           {"participant_id", s.participant_id},
           {"seed", s.seed},
           {"total_items", s.playlist.size()},
           {"training_items", cfg.training_items},
           {"grey_screen_seconds", cfg.grey_screen_seconds},
           {"max_session_minutes", cfg.max_session_minutes},
           {"score_min", kScoreMin},
           {"score_max", kScoreMax},
           {"state", SessionStateName(s.state())}});
  }));

  http.Get(R"(/sessions/([^/]+)/next)",
           Guard([&svc](const httplib::Request& req, httplib::Response& res) {
             const PlaybackInstruction p = svc.Next(req.matches[1]);
             json body = {{"done", p.done}, {"total_items", p.total_items}};
             if (!p.done) {
               body["item_id"] = p.item_id;
               body["grey_seconds"] = p.grey_seconds;
               body["media"] = "/media/" + p.media;
               body["training"] = p.training;
             }
             Reply(res, 200, body);
           }));

  http.Post(R"(/sessions/([^/]+)/ratings)",
            Guard([&svc](const httplib::Request& req, httplib::Response& res) {
              const json body = ParseBody(req);
              const auto item = Field<size_t>(body, "item_id");
              const auto score = Field<double>(body, "score");
              const RatingAck ack = svc.SubmitRating(req.matches[1], item, score);
              Reply(res, 200,
                    {{"session_id", ack.session_id},
                     {"item_id", ack.item_id},
                     {"cursor", ack.cursor},
                     {"state", SessionStateName(ack.state)}});
            }));

  http.Get("/export", Guard([&svc](const httplib::Request&,
                                   httplib::Response& res) {
             res.status = 200;
             res.set_content(svc.ExportRatings(), "text/csv");
           }));
}

StudyServer::~StudyServer() = default;

int StudyServer::Bind(const std::string& host, int port) {
  httplib::Server& http = impl_->http;
  if (port == 0) {
    const int bound = http.bind_to_any_port(host);
    if (bound < 0) {
      throw Error(ErrorKind::kIo, "cannot bind to " + host);
    }
    return bound;
  }
  if (!http.bind_to_port(host, port)) {
    throw Error(ErrorKind::kIo,
                "cannot bind to " + host + ":" + std::to_string(port));
  }
  return port;
}

void StudyServer::Run() { impl_->http.listen_after_bind(); }

void StudyServer::Stop() { impl_->http.stop(); }

}  // namespace bitdepth
