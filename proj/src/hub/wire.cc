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

#include "convoref/hub/wire.h"

#include "convoref/common/error.h"
#include "convoref/common/text.h"

namespace convoref::hub {

using nlohmann::json;

std::string_view RoleName(Role role) {
  return role == Role::kSpeaker ? "speaker" : "viewer";
}

namespace {

struct TypeNamer {
  std::string_view operator()(const SessionHello &) const {
    return "session_hello";
  }
  std::string_view operator()(const TranscriptUpdate &) const {
    return "transcript_update";
  }
  std::string_view operator()(const KeywordsUpdate &) const {
    return "keywords_update";
  }
  std::string_view operator()(const SelectKeyword &) const {
    return "select_keyword";
  }
  std::string_view operator()(const ReferenceReady &) const {
    return "reference_ready";
  }
  std::string_view operator()(const ErrorMsg &) const { return "error"; }
  std::string_view operator()(const Ping &) const { return "ping"; }
  std::string_view operator()(const Pong &) const { return "pong"; }
};

json KeywordToJson(const nlp::Keyword &k) {
  return {{"id", k.id},
          {"phrase", k.phrase},
          {"category", nlp::CategoryName(k.category)},
          {"score", k.score},
          {"color_code", nlp::ColorName(k.color_code())}};
}

struct BodyWriter {
  json &j;
  void operator()(const SessionHello &m) const {
    j["role"] = RoleName(m.role);
    j["server_time_ms"] = m.server_time_ms;
  }
  void operator()(const TranscriptUpdate &m) const {
    j["seq"] = m.seq;
    j["text"] = m.text;
    j["is_final"] = m.is_final;
  }
  void operator()(const KeywordsUpdate &m) const {
    j["seq"] = m.seq;
    json list = json::array();
    for (const auto &k : m.keywords) list.push_back(KeywordToJson(k));
    j["keywords"] = std::move(list);
  }
  void operator()(const SelectKeyword &m) const {
    j["keyword_id"] = m.keyword_id;
    if (m.kind) j["kind"] = refs::KindName(*m.kind);
  }
  void operator()(const ReferenceReady &m) const {
    j["keyword_id"] = m.keyword_id;
    j["kind"] = refs::KindName(m.kind);
    j["bundle"] = refs::BundleToJson(m.bundle);
  }
  void operator()(const ErrorMsg &m) const {
    j["code"] = m.code;
    j["detail"] = m.detail;
  }
  void operator()(const Ping &m) const {
    j["nonce"] = m.nonce;
    j["sent_at_ms"] = m.sent_at_ms;
  }
  void operator()(const Pong &m) const {
    j["nonce"] = m.nonce;
    j["sent_at_ms"] = m.sent_at_ms;
  }
};

[[noreturn]] void Bad(const std::string &detail) {
  throw Error(ErrorCode::kBadMessage, detail);
}

const json &Field(const json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end()) Bad(std::string("missing field '") + name + "'");
  return *it;
}

std::string StringField(const json &j, const char *name) {
  const json &v = Field(j, name);
  if (!v.is_string()) Bad(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::string OptString(const json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) Bad(std::string("field '") + name + "' must be a string");
  return it->get<std::string>();
}

double OptNumber(const json &j, const char *name, double fallback) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_number()) Bad(std::string("field '") + name + "' must be a number");
  return it->get<double>();
}

int64_t OptInt(const json &j, const char *name, int64_t fallback) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) {
    Bad(std::string("field '") + name + "' must be an integer");
  }
  return it->get<int64_t>();
}

bool BoolField(const json &j, const char *name, std::optional<bool> fallback) {
  auto it = j.find(name);
  if (it == j.end()) {
    if (fallback) return *fallback;
    Bad(std::string("missing field '") + name + "'");
  }
  if (!it->is_boolean()) Bad(std::string("field '") + name + "' must be a boolean");
  return it->get<bool>();
}

refs::ReferenceKind KindField(const std::string &name) {
  auto kind = refs::ParseKind(name);
  if (!kind) Bad("unknown reference kind '" + name + "'");
  return *kind;
}

nlp::Keyword KeywordFromJson(const json &j, int64_t seq) {
  if (!j.is_object()) Bad("keyword must be an object");
  nlp::Keyword k;
  k.id = StringField(j, "id");
  k.phrase = StringField(j, "phrase");
  k.normalized = NormalizePhrase(k.phrase);
  auto cat = nlp::ParseCategory(StringField(j, "category"));
  if (!cat) Bad("unknown category");
  k.category = *cat;
  k.score = OptNumber(j, "score", 0.0);
  k.source_seq = seq;
  return k;
}

}  // namespace

std::string_view TypeName(const MessageBody &body) {
  return std::visit(TypeNamer{}, body);
}

std::string_view WireMessage::type() const { return TypeName(body); }

json ToJson(const WireMessage &msg) {
  json j = json::object();
  j["type"] = msg.type();
  j["session_id"] = msg.session_id;
  if (msg.delivery_index >= 0) j["delivery_index"] = msg.delivery_index;
  std::visit(BodyWriter{j}, msg.body);
  return j;
}

std::string Encode(const WireMessage &msg) { return ToJson(msg).dump(); }

std::string EncodeBody(const WireMessage &msg) {
  json j = ToJson(msg);
  j.erase("delivery_index");
  return j.dump();
}

std::string WithDeliveryIndex(std::string_view encoded_body, int64_t index) {
  // EncodeBody() always yields a non-empty object: "{...}".
  std::string out = "{\"delivery_index\":" + std::to_string(index) + ",";
  out.append(encoded_body.substr(1));
  return out;
}

WireMessage Decode(std::string_view frame) {
  json j = json::parse(frame, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) Bad("frame is not valid JSON");
  if (!j.is_object()) Bad("frame must be a JSON object");
  auto t = j.find("type");
  if (t == j.end() || !t->is_string()) Bad("missing message type");
  const std::string type = t->get<std::string>();

  WireMessage msg;
  msg.session_id = OptString(j, "session_id");
  msg.delivery_index = OptInt(j, "delivery_index", -1);
  try {
    if (type == "session_hello") {
      SessionHello m;
      std::string role = OptString(j, "role");
      if (role.empty() || role == "viewer") {
        m.role = Role::kViewer;
      } else if (role == "speaker") {
        m.role = Role::kSpeaker;
      } else {
        Bad("role must be 'speaker' or 'viewer'");
      }
      m.server_time_ms = OptInt(j, "server_time_ms", 0);
      if (msg.session_id.empty()) Bad("session_hello needs a session_id");
      msg.body = m;
    } else if (type == "transcript_update") {
      TranscriptUpdate m;
      m.seq = OptInt(j, "seq", -1);
      m.text = StringField(j, "text");
      m.is_final = BoolField(j, "is_final", false);
      msg.body = std::move(m);
    } else if (type == "keywords_update") {
      KeywordsUpdate m;
      m.seq = OptInt(j, "seq", 0);
      const json &list = Field(j, "keywords");
      if (!list.is_array()) Bad("keywords must be a list");
      for (const json &k : list) m.keywords.push_back(KeywordFromJson(k, m.seq));
      msg.body = std::move(m);
    } else if (type == "select_keyword") {
      SelectKeyword m;
      m.keyword_id = StringField(j, "keyword_id");
      std::string kind = OptString(j, "kind");
      if (!kind.empty()) m.kind = KindField(kind);
      msg.body = std::move(m);
    } else if (type == "reference_ready") {
      ReferenceReady m;
      m.keyword_id = StringField(j, "keyword_id");
      m.kind = KindField(StringField(j, "kind"));
      m.bundle = refs::BundleFromJson(Field(j, "bundle"));
      msg.body = std::move(m);
    } else if (type == "error") {
      msg.body = ErrorMsg{StringField(j, "code"), OptString(j, "detail")};
    } else if (type == "ping") {
      msg.body = Ping{OptString(j, "nonce"), OptNumber(j, "sent_at_ms", 0)};
    } else if (type == "pong") {
      msg.body = Pong{OptString(j, "nonce"), OptNumber(j, "sent_at_ms", 0)};
    } else {
      throw Error(ErrorCode::kUnknownMessageType,
                  "unknown message type '" + type + "'");
    }
  } catch (const json::exception &e) {
    Bad(e.what());
  }
  return msg;
}

WireMessage MakeError(std::string session_id, std::string_view code,
                      std::string detail) {
  return WireMessage{std::move(session_id), -1,
                     ErrorMsg{std::string(code), std::move(detail)}};
}

}  // namespace convoref::hub
