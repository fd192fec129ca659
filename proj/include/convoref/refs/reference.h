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

#ifndef CONVOREF_REFS_REFERENCE_H_
#define CONVOREF_REFS_REFERENCE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace convoref::refs {

enum class ReferenceKind {
  kImageSet,
  kSearchResults,
  kMap,
  kWeather,
  kWikiSnippet,
  kCalendar,
  kNews,
};

inline constexpr std::array<ReferenceKind, 7> kAllKinds = {
    ReferenceKind::kImageSet,    ReferenceKind::kSearchResults,
    ReferenceKind::kMap,         ReferenceKind::kWeather,
    ReferenceKind::kWikiSnippet, ReferenceKind::kCalendar,
    ReferenceKind::kNews,
};

// Wire and fixture-file name, e.g. "image_set".
std::string_view KindName(ReferenceKind kind);

// Accepts wire names; returns nullopt for anything else.
std::optional<ReferenceKind> ParseKind(std::string_view name);

enum class BundleStatus { kOk, kUnavailable };

std::string_view StatusName(BundleStatus status);

struct ProviderFailure {
  std::string provider_id;
  std::string reason;
};

struct ReferenceBundle {
  std::string keyword_id;
  ReferenceKind kind = ReferenceKind::kImageSet;
  BundleStatus status = BundleStatus::kOk;
  nlohmann::json payload;
  std::string provider_id;
  int64_t fetched_at_ms = 0;  // unix epoch milliseconds
  int ttl_s = 0;
  std::vector<ProviderFailure> failures;

  bool ok() const { return status == BundleStatus::kOk; }
};

// Checks that `payload` has the shape required for `kind`. Returns an
// explanation on mismatch, nullopt when valid.
//
//   image_set:       [{url, thumb_url, caption}, ...]          non-empty
//   search_results:  [{title, url, snippet}, ...]              non-empty
//   news:            [{title, url, snippet}, ...]              non-empty
//   map:             {lat, lon, zoom, tile_or_static_url}
//   weather:         {location_name, temp_c, condition, forecast: [...]}
//   wiki_snippet:    {title, extract, page_url, lead_image_url}
//   calendar:        {iso_date_or_range, label}
std::optional<std::string> ValidatePayload(ReferenceKind kind,
                                           const nlohmann::json &payload);

nlohmann::json BundleToJson(const ReferenceBundle &bundle);

// Throws Error(kBadMessage) on malformed input.
ReferenceBundle BundleFromJson(const nlohmann::json &j);

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_REFERENCE_H_
