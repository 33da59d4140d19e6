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

#ifndef BITDEPTH_ERROR_H_
#define BITDEPTH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bitdepth {

// Coarse error classes. Each maps onto a stable, greppable name used by the
// command-line front end.
enum class ErrorKind {
  kInvalidArgument,
  kPrecondition,
  kFormat,          // malformed descriptor / ratings / config text
  kLengthMismatch,  // raw data size disagrees with the descriptor
  kSampleRange,     // a sample exceeds the declared bit depth
  kIo,
  kNotFound,
  kState,  // stale or out-of-order request against a stateful object
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bitdepth

#endif  // BITDEPTH_ERROR_H_
