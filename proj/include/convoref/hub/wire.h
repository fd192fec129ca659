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

#ifndef CONVOREF_HUB_WIRE_H_
#define CONVOREF_HUB_WIRE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convoref/nlp/types.h"
#include "convoref/refs/reference.h"
#include "json.hpp"

namespace convoref::hub {

// WebSocket close codes.
inline constexpr int kCloseHandshakeTimeout = 4000;
inline constexpr int kCloseSlowConsumer = 4001;
inline constexpr int kCloseProtocolViolation = 4002;
inline constexpr int kCloseGoingAway = 1001;  // heartbeat lost, shutdown

enum class Role { kSpeaker, kViewer };

std::string_view RoleName(Role role);

struct SessionHello {
  Role role = Role::kViewer;
  int64_t server_time_ms = 0;
};

struct TranscriptUpdate {
  int64_t seq = -1;  // assigned by the server; ignored on receipt
  std::string text;
  bool is_final = false;
};

struct KeywordsUpdate {
  int64_t seq = 0;
  std::vector<nlp::Keyword> keywords;
};

struct SelectKeyword {
  std::string keyword_id;
  std::optional<refs::ReferenceKind> kind;
};

struct ReferenceReady {
  std::string keyword_id;
  refs::ReferenceKind kind = refs::ReferenceKind::kImageSet;
  refs::ReferenceBundle bundle;
};

struct ErrorMsg {
  std::string code;  // ErrorCodeName(), e.g. "KEYWORD_NOT_FOUND"
  std::string detail;
};

struct Ping {
  std::string nonce;
  double sent_at_ms = 0.0;
};

struct Pong {
  std::string nonce;
  double sent_at_ms = 0.0;
};

using MessageBody =
    std::variant<SessionHello, TranscriptUpdate, KeywordsUpdate, SelectKeyword,
                 ReferenceReady, ErrorMsg, Ping, Pong>;

// One protocol message. On the wire it is a flat JSON object:
//
//   {"type": "keywords_update", "session_id": "s1", "delivery_index": 7,
//    "seq": 3, "keywords": [{"id", "phrase", "category", "score",
//                            "color_code"}, ...]}
//
// delivery_index is assigned per connection by the server and is absent
// from client-sent messages.
struct WireMessage {
  std::string session_id;
  int64_t delivery_index = -1;
  MessageBody body;

  std::string_view type() const;

  template <typename T>
  const T *As() const {
    return std::get_if<T>(&body);
  }
};

// Type tag for a body alternative, e.g. "select_keyword".
std::string_view TypeName(const MessageBody &body);

nlohmann::json ToJson(const WireMessage &msg);

// Compact JSON text.
std::string Encode(const WireMessage &msg);

// Encoding of `msg` without delivery_index; see WithDeliveryIndex().
std::string EncodeBody(const WireMessage &msg);

// Inserts a delivery index into an EncodeBody() result without re-encoding.
std::string WithDeliveryIndex(std::string_view encoded_body, int64_t index);

// Parses one frame. Unknown extra fields are ignored. Throws
// Error(kBadMessage) for malformed JSON or missing/mistyped fields and
// Error(kUnknownMessageType) for unrecognized type tags.
WireMessage Decode(std::string_view frame);

WireMessage MakeError(std::string session_id, std::string_view code,
                      std::string detail);

}  // namespace convoref::hub

#endif  // CONVOREF_HUB_WIRE_H_
