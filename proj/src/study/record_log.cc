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

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>
#include <vector>

#include "bitdepth/error.h"
#include "bitdepth/study.h"
#include "json.hpp"

namespace bitdepth {
namespace {

Error IoError(const std::string& what, const std::string& path) {
  return Error(ErrorKind::kIo,
               what + " '" + path + "': " + std::strerror(errno));
}

}  // namespace

RecordLog::RecordLog(std::string path) : path_(std::move(path)) {
  fd_ = ::open(path_.c_str(), O_RDWR | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw IoError("cannot open record log", path_);
}

RecordLog::~RecordLog() {
  if (fd_ >= 0) ::close(fd_);
}

std::vector<std::string> RecordLog::Replay() {
  std::string data;
  char buf[1 << 16];
  off_t offset = 0;
  for (;;) {
    const ssize_t got = ::pread(fd_, buf, sizeof(buf), offset);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw IoError("cannot read record log", path_);
    }
    if (got == 0) break;
    data.append(buf, static_cast<size_t>(got));
    offset += got;
  }

  std::vector<std::string> lines;
  size_t pos = 0;
  size_t good_end = 0;
  size_t line_no = 0;
  while (pos < data.size()) {
    const size_t nl = data.find('\n', pos);
    ++line_no;
    if (nl == std::string::npos) break;  // torn tail
    std::string line = data.substr(pos, nl - pos);
    if (!nlohmann::json::accept(line)) {
      if (nl + 1 == data.size()) break;  // damaged final record
      throw Error(ErrorKind::kFormat, "record log '" + path_ + "' line " +
                                          std::to_string(line_no) +
                                          " is not a valid record");
    }
    lines.push_back(std::move(line));
    pos = nl + 1;
    good_end = pos;
  }
  if (good_end < data.size()) {
    if (::ftruncate(fd_, static_cast<off_t>(good_end)) != 0) {
      throw IoError("cannot truncate torn record in", path_);
    }
    ::fsync(fd_);
  }
  return lines;
}

void RecordLog::Append(const std::string& line) {
  if (line.find('\n') != std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "record must not contain a newline");
  }
  const std::string record = line + "\n";
  // One write() per record keeps concurrent appenders from interleaving.
  size_t done = 0;
  while (done < record.size()) {
    const ssize_t n =
        ::write(fd_, record.data() + done, record.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError("cannot append to record log", path_);
    }
    done += static_cast<size_t>(n);
  }
  if (::fsync(fd_) != 0) throw IoError("cannot sync record log", path_);
}

}  // namespace bitdepth
