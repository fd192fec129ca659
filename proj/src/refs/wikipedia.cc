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

#include "convoref/refs/wikipedia.h"

#include <fstream>
#include <sstream>

namespace convoref::refs {

using nlohmann::json;

std::string WikipediaSummaryUrl(std::string_view title, std::string_view base) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string url(base);
  for (unsigned char c : title) {
    if (c == ' ') {
      url += '_';
    } else if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
               (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' ||
               c == '~') {
      url += static_cast<char>(c);
    } else {
      url += '%';
      url += kHex[c >> 4];
      url += kHex[c & 15];
    }
  }
  return url;
}

json ParseWikipediaSummary(std::string_view body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ProviderError("wikipedia: malformed summary response");
  }
  std::string type = doc.value("type", "standard");
  if (type == "disambiguation") {
    throw ProviderError("wikipedia: disambiguation page");
  }
  if (type.find("not_found") != std::string::npos) {
    throw ProviderError("wikipedia: page not found");
  }
  std::string title = doc.value("title", "");
  std::string extract = doc.value("extract", "");
  std::string page_url;
  if (auto it = doc.find("content_urls"); it != doc.end() && it->is_object()) {
    page_url = it->value("/desktop/page"_json_pointer, "");
  }
  if (title.empty() || extract.empty() || page_url.empty()) {
    throw ProviderError("wikipedia: summary lacks title, extract or page url");
  }
  std::string image;
  for (const char *key : {"originalimage", "thumbnail"}) {
    if (auto it = doc.find(key); it != doc.end() && it->is_object()) {
      image = it->value("source", "");
      if (!image.empty()) break;
    }
  }
  return {{"title", title},
          {"extract", extract},
          {"page_url", page_url},
          {"lead_image_url", image}};
}

WikipediaProvider::WikipediaProvider(Fetcher fetcher, std::string id,
                                     std::chrono::milliseconds timeout,
                                     std::string base)
    : fetcher_(std::move(fetcher)),
      id_(std::move(id)),
      timeout_(timeout),
      base_(std::move(base)) {}

json WikipediaProvider::Query(const ProviderQuery &query) {
  if (query.kind != ReferenceKind::kWikiSnippet) {
    throw ProviderError("wikipedia provider only serves wiki_snippet");
  }
  return ParseWikipediaSummary(
      fetcher_(WikipediaSummaryUrl(query.phrase, base_)));
}

Fetcher RecordedFetcher(std::string dir) {
  return [dir = std::move(dir)](const std::string &url) {
    std::string segment = url.substr(url.find_last_of('/') + 1);
    std::string path = dir + "/" + segment + ".json";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProviderError("HTTP 404 for " + url);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
}

#ifndef CONVOREF_LIVE_PROVIDERS
Fetcher HttpsFetcher(std::chrono::milliseconds) {
  return [](const std::string &url) -> std::string {
    throw ProviderError("live providers not built; cannot fetch " + url);
  };
}

bool HttpsFetcherAvailable() { return false; }
#endif

}  // namespace convoref::refs
