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

#include "convoref/common/error.h"

namespace convoref {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateSession: return "DUPLICATE_SESSION";
    case ErrorCode::kSessionNotFound: return "SESSION_NOT_FOUND";
    case ErrorCode::kEmptySegment: return "EMPTY_SEGMENT";
    case ErrorCode::kConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kKeywordNotFound: return "KEYWORD_NOT_FOUND";
    case ErrorCode::kProvidersUnavailable: return "PROVIDERS_UNAVAILABLE";
    case ErrorCode::kDuplicateProvider: return "DUPLICATE_PROVIDER";
    case ErrorCode::kBadMessage: return "BAD_MESSAGE";
    case ErrorCode::kUnknownMessageType: return "UNKNOWN_MESSAGE_TYPE";
    case ErrorCode::kHelloRequired: return "HELLO_REQUIRED";
    case ErrorCode::kForbidden: return "FORBIDDEN";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code) {}

}  // namespace convoref
