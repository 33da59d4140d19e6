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

#include "bitdepth/study.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "bitdepth/error.h"
#include "json.hpp"

namespace bitdepth {
namespace {

using json = nlohmann::ordered_json;

// Fisher-Yates with an explicit modulo draw so the order is stable across
// standard library implementations.
void Shuffle(std::vector<size_t>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

int64_t NowMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Error ConfigError(const std::string& what) {
  return Error(ErrorKind::kFormat, "study config: " + what);
}

}  // namespace

void StudyConfig::Validate() const {
  if (conditions.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "study config has an empty condition list");
  }
  if (!(grey_screen_seconds > 0.0) || !std::isfinite(grey_screen_seconds)) {
    throw Error(ErrorKind::kInvalidArgument,
                "grey_screen_seconds must be > 0");
  }
  if (!(max_session_minutes > 0.0) || !std::isfinite(max_session_minutes)) {
    throw Error(ErrorKind::kInvalidArgument,
                "max_session_minutes must be > 0");
  }
  if (training_items > conditions.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "training_items (" + std::to_string(training_items) +
                    ") exceeds the number of conditions (" +
                    std::to_string(conditions.size()) + ")");
  }
  for (const StudyCondition& c : conditions) {
    if (c.condition.sequence.empty() || c.media.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "condition " + ToString(c.condition) +
                      " needs a sequence name and a media path");
    }
    if (c.condition.sequence.find_first_of(",\n\r") != std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sequence name '" + c.condition.sequence +
                      "' cannot be exported as a ratings field");
    }
    if (c.condition.bit_depth < 1 || c.condition.bit_depth > 16) {
      throw Error(ErrorKind::kInvalidArgument,
                  "condition " + ToString(c.condition) +
                      " has a bit depth outside 1..16");
    }
  }
}

StudyConfig StudyConfig::FromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  if (!j.is_object()) throw ConfigError("top level must be an object");
  StudyConfig cfg;
  try {
    if (!j.contains("conditions") || !j["conditions"].is_array()) {
      throw ConfigError("'conditions' must be an array");
    }
    for (const json& c : j["conditions"]) {
      StudyCondition sc;
      sc.condition.sequence = c.at("sequence").get<std::string>();
      sc.condition.method = ParseMethod(c.at("method").get<std::string>());
      sc.condition.bit_depth = c.at("bit_depth").get<int>();
      sc.media = c.at("media").get<std::string>();
      cfg.conditions.push_back(std::move(sc));
    }
    if (j.contains("grey_screen_seconds")) {
      cfg.grey_screen_seconds = j["grey_screen_seconds"].get<double>();
    }
    if (j.contains("training_items")) {
      cfg.training_items = j["training_items"].get<size_t>();
    }
    if (j.contains("max_session_minutes")) {
      cfg.max_session_minutes = j["max_session_minutes"].get<double>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  try {
    cfg.Validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

StudyConfig StudyConfig::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kNotFound,
                "cannot open study config '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

std::string StudyConfig::ToJson() const {
  json j;
  j["conditions"] = json::array();
  for (const StudyCondition& c : conditions) {
    j["conditions"].push_back({{"sequence", c.condition.sequence},
                               {"method", MethodName(c.condition.method)},
                               {"bit_depth", c.condition.bit_depth},
                               {"media", c.media}});
  }
  j["grey_screen_seconds"] = grey_screen_seconds;
  j["training_items"] = training_items;
  j["max_session_minutes"] = max_session_minutes;
  return j.dump(2) + "\n";
}

StudyConfig FullStudyPlan(std::span<const std::string> sequences,
                          int native_depth, std::span<const int> depths) {
  if (sequences.empty() || depths.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "study plan needs sequences and depths");
  }
  for (int d : depths) {
    if (d < 1 || d >= native_depth) {
      throw Error(ErrorKind::kInvalidArgument,
                  "plan depth " + std::to_string(d) +
                      " must lie below the native depth " +
                      std::to_string(native_depth));
    }
  }
  StudyConfig cfg;
  const auto media = [](const std::string& seq, Method m, int depth) {
    return seq + "/" + std::string(MethodName(m)) + "_" +
           std::to_string(depth) + ".mp4";
  };
  for (const std::string& seq : sequences) {
    for (int d : depths) {
      for (Method m : {Method::kLinear, Method::kErrorDiffusion,
                       Method::kAdaptiveGaussian}) {
        cfg.conditions.push_back({{seq, m, d}, media(seq, m, d)});
      }
    }
    cfg.conditions.push_back({{seq, Method::kReference, native_depth},
                              media(seq, Method::kReference, native_depth)});
  }
  return cfg;
}

std::vector<PlaylistItem> BuildPlaylist(const StudyConfig& config,
                                        uint64_t seed) {
  config.Validate();
  std::mt19937_64 rng(seed);
  const size_t n = config.conditions.size();
  std::vector<size_t> training(n);
  std::iota(training.begin(), training.end(), 0);
  Shuffle(training, rng);
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, rng);

  std::vector<PlaylistItem> playlist;
  playlist.reserve(config.training_items + n);
  for (size_t i = 0; i < config.training_items; ++i) {
    playlist.push_back({training[i], true});
  }
  for (size_t idx : order) playlist.push_back({idx, false});
  return playlist;
}

std::string_view SessionStateName(SessionState state) {
  switch (state) {
    case SessionState::kTraining:
      return "training";
    case SessionState::kRating:
      return "rating";
    case SessionState::kComplete:
      return "complete";
  }
  return "unknown";
}

SessionState Session::state() const {
  if (cursor >= playlist.size()) return SessionState::kComplete;
  return playlist[cursor].training ? SessionState::kTraining
                                   : SessionState::kRating;
}

StudyService::StudyService(StudyConfig config, const std::string& log_path)
    : config_(std::move(config)) {
  config_.Validate();
  log_ = std::make_unique<RecordLog>(log_path);
  for (const std::string& line : log_->Replay()) Apply(line);
}

// Rebuilds state from one log record. Records are trusted to have passed
// the same checks when they were first accepted, but indices are still
// checked against the current config.
void StudyService::Apply(const std::string& line) {
  const auto bad = [&](const std::string& what) {
    return Error(ErrorKind::kFormat,
                 "record log '" + log_->path() + "': " + what);
  };
  try {
    const json j = json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "session") {
      Session s;
      s.session_id = j.at("session_id").get<std::string>();
      s.participant_id = j.at("participant_id").get<std::string>();
      s.seed = j.at("seed").get<uint64_t>();
      const size_t training = j.at("training_items").get<size_t>();
      const auto indices = j.at("playlist").get<std::vector<size_t>>();
      for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= config_.conditions.size()) {
          throw bad("session " + s.session_id +
                    " references a condition the config lacks");
        }
        s.playlist.push_back({indices[i], i < training});
      }
      next_session_ = std::max(next_session_, j.at("ordinal").get<uint64_t>() + 1);
      sessions_[s.session_id] = std::move(s);
    } else if (type == "rating") {
      StoredRating r;
      r.session_id = j.at("session_id").get<std::string>();
      r.item_id = j.at("item_id").get<size_t>();
      r.training = j.at("training").get<bool>();
      r.timestamp_ms = j.at("timestamp_ms").get<int64_t>();
      r.record.participant_id = j.at("participant_id").get<std::string>();
      r.record.sequence = j.at("sequence").get<std::string>();
      r.record.method = ParseMethod(j.at("method").get<std::string>());
      r.record.bit_depth = j.at("bit_depth").get<int>();
      r.record.score = j.at("score").get<double>();
      const auto it = sessions_.find(r.session_id);
      if (it == sessions_.end() || it->second.cursor != r.item_id) {
        throw bad("rating for " + r.session_id + " item " +
                  std::to_string(r.item_id) + " is out of order");
      }
      ++it->second.cursor;
      ratings_.push_back(std::move(r));
    } else {
      throw bad("unknown record type '" + type + "'");
    }
  } catch (const json::exception& e) {
    throw bad(e.what());
  }
}

Session StudyService::CreateSession(const std::string& participant_id,
                                    std::optional<uint64_t> seed) {
  if (participant_id.empty() ||
      participant_id.find_first_of(",\n\r\"") != std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "participant_id must be non-empty and free of commas, "
                "quotes and newlines");
  }
  if (!seed) {
    std::random_device rd;
    seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  }
  std::lock_guard<std::mutex> lock(mu_);
  Session s;
  const uint64_t ordinal = next_session_;
  s.session_id = "s-" + std::to_string(ordinal);
  s.participant_id = participant_id;
  s.seed = *seed;
  s.playlist = BuildPlaylist(config_, s.seed);

  std::vector<size_t> indices;
  for (const PlaylistItem& p : s.playlist) indices.push_back(p.condition_index);
  const json record = {{"type", "session"},
                       {"session_id", s.session_id},
                       {"ordinal", ordinal},
                       {"participant_id", participant_id},
                       {"seed", s.seed},
                       {"training_items", config_.training_items},
                       {"playlist", indices},
                       {"timestamp_ms", NowMs()}};
  log_->Append(record.dump());
  next_session_ = ordinal + 1;
  sessions_[s.session_id] = s;
  return s;
}

PlaybackInstruction StudyService::Next(const std::string& session_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw Error(ErrorKind::kNotFound, "unknown session '" + session_id + "'");
  }
  const Session& s = it->second;
  PlaybackInstruction p;
  p.total_items = s.playlist.size();
  if (s.cursor >= s.playlist.size()) {
    p.done = true;
    return p;
  }
  const PlaylistItem& item = s.playlist[s.cursor];
  p.item_id = s.cursor;
  p.grey_seconds = config_.grey_screen_seconds;
  p.media = config_.conditions[item.condition_index].media;
  p.training = item.training;
  return p;
}

RatingAck StudyService::SubmitRating(const std::string& session_id,
                                     size_t item_id, double score) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw Error(ErrorKind::kNotFound, "unknown session '" + session_id + "'");
  }
  Session& s = it->second;
  if (!std::isfinite(score) || score < kScoreMin || score > kScoreMax) {
    throw Error(ErrorKind::kSampleRange,
                "score " + FormatDouble(score) + " is outside [" +
                    FormatDouble(kScoreMin) + ", " + FormatDouble(kScoreMax) +
                    "]");
  }
  if (s.cursor >= s.playlist.size()) {
    throw Error(ErrorKind::kState, "session " + session_id + " is complete");
  }
  if (item_id != s.cursor) {
    throw Error(ErrorKind::kState,
                "item " + std::to_string(item_id) + " is not the current item (" +
                    std::to_string(s.cursor) + ") of session " + session_id);
  }
  const PlaylistItem& item = s.playlist[s.cursor];
  const Condition& c = config_.conditions[item.condition_index].condition;
  StoredRating r;
  r.record = {s.participant_id, c.sequence, c.method, c.bit_depth, score};
  r.session_id = session_id;
  r.item_id = item_id;
  r.training = item.training;
  r.timestamp_ms = NowMs();
  const json record = {{"type", "rating"},
                       {"session_id", session_id},
                       {"item_id", item_id},
                       {"participant_id", s.participant_id},
                       {"sequence", c.sequence},
                       {"method", MethodName(c.method)},
                       {"bit_depth", c.bit_depth},
                       {"score", score},
                       {"training", item.training},
                       {"timestamp_ms", r.timestamp_ms}};
  log_->Append(record.dump());
  ++s.cursor;
  ratings_.push_back(std::move(r));
  return {session_id, item_id, s.cursor, s.state()};
}

void StudyService::ExportRatings(std::ostream& out) const {
  std::vector<RatingRecord> records;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const StoredRating& r : ratings_) {
      if (!r.training) records.push_back(r.record);
    }
  }
  WriteRatings(out, records);
}

std::string StudyService::ExportRatings() const {
  std::ostringstream out;
  ExportRatings(out);
  return out.str();
}

std::optional<Session> StudyService::FindSession(
    const std::string& session_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) return std::nullopt;
  return it->second;
}

std::vector<StoredRating> StudyService::Ratings() const {
  std::lock_guard<std::mutex> lock(mu_);
  return ratings_;
}

}  // namespace bitdepth
