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

#include "convoref/refs/reference.h"

#include "convoref/common/error.h"

namespace convoref::refs {

using nlohmann::json;

std::string_view KindName(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::kImageSet: return "image_set";
    case ReferenceKind::kSearchResults: return "search_results";
    case ReferenceKind::kMap: return "map";
    case ReferenceKind::kWeather: return "weather";
    case ReferenceKind::kWikiSnippet: return "wiki_snippet";
    case ReferenceKind::kCalendar: return "calendar";
    case ReferenceKind::kNews: return "news";
  }
  return "unknown";
}

std::optional<ReferenceKind> ParseKind(std::string_view name) {
  for (ReferenceKind k : kAllKinds) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view StatusName(BundleStatus status) {
  return status == BundleStatus::kOk ? "ok" : "unavailable";
}

namespace {

std::optional<std::string> RequireFields(
    const json &obj, std::initializer_list<std::pair<const char *, bool>>
                         fields /* name, numeric */) {
  if (!obj.is_object()) return "expected an object";
  for (const auto &[name, numeric] : fields) {
    auto it = obj.find(name);
    if (it == obj.end()) return std::string("missing field '") + name + "'";
    if (numeric ? !it->is_number() : !it->is_string()) {
      return std::string("field '") + name + "' has the wrong type";
    }
  }
  return std::nullopt;
}

std::optional<std::string> RequireList(
    const json &payload,
    std::initializer_list<std::pair<const char *, bool>> fields) {
  if (!payload.is_array()) return "expected a list";
  if (payload.empty()) return "list is empty";
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (auto err = RequireFields(payload[i], fields)) {
      return "item " + std::to_string(i) + ": " + *err;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> ValidatePayload(ReferenceKind kind,
                                           const json &payload) {
  switch (kind) {
    case ReferenceKind::kImageSet:
      return RequireList(payload,
                         {{"url", false}, {"thumb_url", false},
                          {"caption", false}});
    case ReferenceKind::kSearchResults:
    case ReferenceKind::kNews:
      return RequireList(payload,
                         {{"title", false}, {"url", false},
                          {"snippet", false}});
    case ReferenceKind::kMap:
      return RequireFields(payload, {{"lat", true}, {"lon", true},
                                     {"zoom", true},
                                     {"tile_or_static_url", false}});
    case ReferenceKind::kWeather: {
      if (auto err = RequireFields(payload, {{"location_name", false},
                                             {"temp_c", true},
                                             {"condition", false}})) {
        return err;
      }
      if (!payload.contains("forecast") || !payload["forecast"].is_array()) {
        return "field 'forecast' must be a list";
      }
      return std::nullopt;
    }
    case ReferenceKind::kWikiSnippet:
      return RequireFields(payload, {{"title", false}, {"extract", false},
                                     {"page_url", false},
                                     {"lead_image_url", false}});
    case ReferenceKind::kCalendar:
      return RequireFields(payload,
                           {{"iso_date_or_range", false}, {"label", false}});
  }
  return "unknown kind";
}

json BundleToJson(const ReferenceBundle &b) {
  json j = {
      {"keyword_id", b.keyword_id},
      {"kind", KindName(b.kind)},
      {"status", StatusName(b.status)},
      {"payload", b.payload},
      {"provider_id", b.provider_id},
      {"fetched_at_ms", b.fetched_at_ms},
      {"ttl_s", b.ttl_s},
  };
  if (!b.failures.empty()) {
    json failures = json::array();
    for (const auto &f : b.failures) {
      failures.push_back({{"provider_id", f.provider_id},
                          {"reason", f.reason}});
    }
    j["failures"] = std::move(failures);
  }
  return j;
}

ReferenceBundle BundleFromJson(const json &j) {
  try {
    ReferenceBundle b;
    b.keyword_id = j.at("keyword_id").get<std::string>();
    auto kind = ParseKind(j.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::kBadMessage, "unknown reference kind");
    b.kind = *kind;
    std::string status = j.value("status", "ok");
    if (status != "ok" && status != "unavailable") {
      throw Error(ErrorCode::kBadMessage, "unknown bundle status " + status);
    }
    b.status = status == "ok" ? BundleStatus::kOk : BundleStatus::kUnavailable;
    b.payload = j.value("payload", json());
    b.provider_id = j.value("provider_id", "");
    b.fetched_at_ms = j.value("fetched_at_ms", int64_t{0});
    b.ttl_s = j.value("ttl_s", 0);
    if (j.contains("failures")) {
      for (const auto &f : j["failures"]) {
        b.failures.push_back({f.at("provider_id").get<std::string>(),
                              f.at("reason").get<std::string>()});
      }
    }
    return b;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kBadMessage, std::string("bad bundle: ") + e.what());
  }
}

}  // namespace convoref::refs
