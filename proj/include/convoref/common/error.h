// Copyright 2026 The Convoref Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVOREF_COMMON_ERROR_H_
#define CONVOREF_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace convoref {

// Error codes surfaced to callers and, by name, on the wire.
enum class ErrorCode {
  kDuplicateSession,
  kSessionNotFound,
  kEmptySegment,
  kConfigInvalid,
  kIoError,
  kKeywordNotFound,
  kProvidersUnavailable,
  kDuplicateProvider,
  kBadMessage,
  kUnknownMessageType,
  kHelloRequired,
  kForbidden,
};

// Wire name of an error code, e.g. "SESSION_NOT_FOUND".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &detail);

  ErrorCode code() const { return code_; }
  std::string_view name() const { return ErrorCodeName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace convoref

#endif  // CONVOREF_COMMON_ERROR_H_
