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

#ifndef BITDEPTH_STUDY_H_
#define BITDEPTH_STUDY_H_

// Single-stimulus rating sessions: per-session randomized playlists,
// grey-screen timing, durable rating collection and export.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitdepth/analysis.h"

namespace bitdepth {

struct StudyCondition {
  Condition condition;
  // Path of the playable clip, relative to the media root.
  std::string media;

  friend bool operator==(const StudyCondition&,
                         const StudyCondition&) = default;
};

struct StudyConfig {
  std::vector<StudyCondition> conditions;
  double grey_screen_seconds = 3.0;
  size_t training_items = 0;
  double max_session_minutes = 30.0;

  // Throws Error(kInvalidArgument).
  void Validate() const;

  // JSON form:
  //   {"conditions": [{"sequence", "method", "bit_depth", "media"}...],
  //    "grey_screen_seconds", "training_items", "max_session_minutes"}
  // Omitted scalar fields take their defaults. Throws Error(kFormat).
  static StudyConfig FromJson(const std::string& text);
  static StudyConfig FromFile(const std::string& path);
  std::string ToJson() const;
};

inline constexpr int kDefaultPlanDepthArray[] = {8, 6, 4, 2};
inline constexpr std::span<const int> kDefaultPlanDepths =
    kDefaultPlanDepthArray;

// Every sequence at every depth under the three adaptation methods, plus
// one reference per sequence at `native_depth`. Media paths are
// "<sequence>/<method>_<depth>.mp4".
StudyConfig FullStudyPlan(std::span<const std::string> sequences,
                          int native_depth,
                          std::span<const int> depths = kDefaultPlanDepths);

struct PlaylistItem {
  size_t condition_index = 0;
  bool training = false;

  friend bool operator==(const PlaylistItem&, const PlaylistItem&) = default;
};

// `training_items` conditions drawn without replacement, flagged as
// training, followed by a permutation of all conditions. Deterministic in
// `seed`.
std::vector<PlaylistItem> BuildPlaylist(const StudyConfig& config,
                                        uint64_t seed);

enum class SessionState { kTraining, kRating, kComplete };
std::string_view SessionStateName(SessionState state);

struct Session {
  std::string session_id;
  std::string participant_id;
  uint64_t seed = 0;
  std::vector<PlaylistItem> playlist;
  size_t cursor = 0;  // index of the next unrated playlist item

  SessionState state() const;
};

struct PlaybackInstruction {
  bool done = false;
  size_t item_id = 0;
  double grey_seconds = 0.0;
  std::string media;
  bool training = false;
  size_t total_items = 0;
};

struct StoredRating {
  RatingRecord record;
  std::string session_id;
  size_t item_id = 0;
  bool training = false;
  int64_t timestamp_ms = 0;
};

struct RatingAck {
  std::string session_id;
  size_t item_id = 0;
  size_t cursor = 0;
  SessionState state = SessionState::kTraining;
};

// Append-only newline-delimited JSON log. Each record is written with a
// single write() on an O_APPEND descriptor and fsync'd before Append
// returns.
class RecordLog {
 public:
  // Creates the file if needed. Throws Error(kIo).
  explicit RecordLog(std::string path);
  ~RecordLog();
  RecordLog(const RecordLog&) = delete;
  RecordLog& operator=(const RecordLog&) = delete;

  // Complete lines currently in the file. An unterminated or unparsable
  // final line (a write torn by a crash) is dropped and truncated away;
  // damage anywhere else throws Error(kFormat).
  std::vector<std::string> Replay();
  void Append(const std::string& line);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  int fd_ = -1;
};

// Session store. All operations are serialized by one mutex, which also
// orders appends to the log.
class StudyService {
 public:
  // Replays `log_path` to restore sessions and ratings. Throws
  // Error(kFormat) if the log references conditions the config lacks.
  StudyService(StudyConfig config, const std::string& log_path);

  // Throws Error(kInvalidArgument) for an empty participant id. A random
  // seed is drawn when none is given; it is stored with the session.
  Session CreateSession(const std::string& participant_id,
                        std::optional<uint64_t> seed = std::nullopt);
  // Does not advance the session. Throws Error(kNotFound).
  PlaybackInstruction Next(const std::string& session_id) const;
  // Throws Error(kNotFound) for an unknown session, Error(kSampleRange) for
  // a score outside [0, 5] and Error(kState) unless `item_id` is the
  // session's current item.
  RatingAck SubmitRating(const std::string& session_id, size_t item_id,
                         double score);

  // Non-training ratings in log order, in the ratings ingest format.
  void ExportRatings(std::ostream& out) const;
  std::string ExportRatings() const;

  std::optional<Session> FindSession(const std::string& session_id) const;
  std::vector<StoredRating> Ratings() const;
  const StudyConfig& config() const { return config_; }

 private:
  void Apply(const std::string& line);

  const StudyConfig config_;
  mutable std::mutex mu_;
  std::unique_ptr<RecordLog> log_;
  std::map<std::string, Session> sessions_;
  std::vector<StoredRating> ratings_;
  uint64_t next_session_ = 1;
};

}  // namespace bitdepth

#endif  // BITDEPTH_STUDY_H_
