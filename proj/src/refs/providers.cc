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

#include "convoref/refs/providers.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "convoref/common/error.h"
#include "convoref/common/text.h"

namespace convoref::refs {

using nlohmann::json;

FixtureProvider::FixtureProvider(std::string id, std::string dir)
    : id_(std::move(id)), dir_(std::move(dir)) {}

std::string FixtureProvider::FileName(std::string_view phrase,
                                      ReferenceKind kind) {
  return Slug(phrase) + "." + std::string(KindName(kind));
}

json FixtureProvider::Query(const ProviderQuery &query) {
  std::string path = dir_ + "/" + FileName(query.phrase, query.kind);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProviderError("no fixture " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw ProviderError("corrupt fixture " + path + ": " + e.what());
  }
}

SyntheticProvider::SyntheticProvider(std::string id) : id_(std::move(id)) {}

namespace {

// FNV-1a; stable across platforms so payloads are reproducible.
uint64_t StableHash(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json ResultList(std::string_view phrase, std::string_view slug,
                std::string_view host, std::string_view noun) {
  json items = json::array();
  for (int i = 1; i <= 3; ++i) {
    std::string n = std::to_string(i);
    items.push_back(
        {{"title", std::string(phrase) + " - " + std::string(noun) + " " + n},
         {"url", "https://" + std::string(host) + "/" + std::string(slug) +
                     "/" + n},
         {"snippet", "Placeholder " + std::string(noun) + " " + n +
                         " about " + std::string(phrase) + "."}});
  }
  return items;
}

}  // namespace

json SyntheticProvider::Query(const ProviderQuery &query) {
  const std::string slug = Slug(query.phrase);
  if (slug.empty()) throw ProviderError("empty phrase");
  switch (query.kind) {
    case ReferenceKind::kImageSet: {
      json items = json::array();
      for (int i = 1; i <= 4; ++i) {
        std::string n = std::to_string(i);
        std::string base = "https://images.example.org/" + slug + "/" + n;
        items.push_back({{"url", base + ".jpg"},
                         {"thumb_url", base + "_thumb.jpg"},
                         {"caption", query.phrase + " (" + n + ")"}});
      }
      return items;
    }
    case ReferenceKind::kSearchResults:
      return ResultList(query.phrase, slug, "search.example.org", "result");
    case ReferenceKind::kNews:
      return ResultList(query.phrase, slug, "news.example.org", "article");
    case ReferenceKind::kWeather: {
      static constexpr const char *kConditions[] = {
          "clear", "partly cloudy", "cloudy", "light rain", "showers",
          "windy"};
      uint64_t h = StableHash(query.normalized);
      auto temp = static_cast<double>(static_cast<int>(h % 35) - 5);
      json forecast = json::array();
      for (int d = 1; d <= 3; ++d) {
        uint64_t hd = StableHash(query.normalized + std::to_string(d));
        forecast.push_back(
            {{"day_offset", d},
             {"high_c", temp + static_cast<double>(hd % 5)},
             {"low_c", temp - static_cast<double>(hd % 7)},
             {"condition", kConditions[hd % 6]}});
      }
      return {{"location_name", query.phrase},
              {"temp_c", temp},
              {"condition", kConditions[h % 6]},
              {"forecast", forecast}};
    }
    case ReferenceKind::kMap:
    case ReferenceKind::kWikiSnippet:
    case ReferenceKind::kCalendar:
      break;
  }
  throw ProviderError("synthetic provider does not serve " +
                      std::string(KindName(query.kind)));
}

GeoTableProvider::GeoTableProvider(std::string id, const std::string &path)
    : id_(std::move(id)) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read geo table: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = t.find('\t', pos);
      cols.emplace_back(Trim(t.substr(pos, tab - pos)));
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    try {
      if (cols.size() != 4) throw std::invalid_argument("column count");
      Place p{cols[0], std::stod(cols[1]), std::stod(cols[2]),
              std::stoi(cols[3])};
      places_[NormalizePhrase(p.name)] = p;
    } catch (const std::exception &) {
      throw Error(ErrorCode::kConfigInvalid,
                  path + ":" + std::to_string(line_no) + ": bad geo row");
    }
  }
}

json GeoTableProvider::Query(const ProviderQuery &query) {
  auto it = places_.find(query.normalized);
  if (it == places_.end()) throw ProviderError("unknown place " + query.phrase);
  const Place &p = it->second;
  char url[200];
  std::snprintf(url, sizeof(url),
                "https://www.openstreetmap.org/?mlat=%.4f&mlon=%.4f#map=%d/"
                "%.4f/%.4f",
                p.lat, p.lon, p.zoom, p.lat, p.lon);
  return {{"lat", p.lat}, {"lon", p.lon}, {"zoom", p.zoom},
          {"tile_or_static_url", url}, {"label", p.name}};
}

}  // namespace convoref::refs
