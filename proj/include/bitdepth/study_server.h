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

#ifndef BITDEPTH_STUDY_SERVER_H_
#define BITDEPTH_STUDY_SERVER_H_

#include <memory>
#include <string>

#include "bitdepth/study.h"

namespace bitdepth {

// HTTP front end for a StudyService. JSON bodies throughout except the
// export, which is the ratings CSV.
//   POST /sessions               {"participant_id", "seed"?}
//   GET  /sessions/{id}/next
//   POST /sessions/{id}/ratings  {"item_id", "score"}
//   GET  /export
//   GET  /media/...              static files from the media root
// Errors answer {"error": <class>, "message": ...} with 400 (bad input),
// 404 (unknown session) or 409 (stale item).
class StudyServer {
 public:
  // `media_root` may be empty to disable static media.
  StudyServer(StudyService& service, const std::string& media_root);
  ~StudyServer();
  StudyServer(const StudyServer&) = delete;
  StudyServer& operator=(const StudyServer&) = delete;

  // Binds and returns the port; port 0 picks a free one. Throws
  // Error(kIo) when binding fails.
  int Bind(const std::string& host, int port);
  // Serves until Stop(). Blocks.
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bitdepth

#endif  // BITDEPTH_STUDY_SERVER_H_
