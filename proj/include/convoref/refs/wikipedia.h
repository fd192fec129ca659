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

#ifndef CONVOREF_REFS_WIKIPEDIA_H_
#define CONVOREF_REFS_WIKIPEDIA_H_

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

#include "convoref/refs/providers.h"

namespace convoref::refs {

// Returns the response body for `url`; throws ProviderError on any failure
// (transport error, non-200 status).
using Fetcher = std::function<std::string(const std::string &url)>;

inline constexpr std::string_view kWikipediaSummaryBase =
    "https://en.wikipedia.org/api/rest_v1/page/summary/";

// Page-summary URL for a title: spaces become underscores and everything
// outside the unreserved set is percent-encoded.
std::string WikipediaSummaryUrl(std::string_view title,
                                std::string_view base = kWikipediaSummaryBase);

// Converts a page-summary response into a wiki_snippet payload. Throws
// ProviderError for malformed bodies, missing pages and disambiguation pages.
nlohmann::json ParseWikipediaSummary(std::string_view body);

class WikipediaProvider : public ProviderAdapter {
 public:
  WikipediaProvider(Fetcher fetcher, std::string id = "wikipedia",
                    std::chrono::milliseconds timeout =
                        std::chrono::milliseconds(2000),
                    std::string base = std::string(kWikipediaSummaryBase));

  const std::string &id() const override { return id_; }
  std::chrono::milliseconds timeout() const override { return timeout_; }
  nlohmann::json Query(const ProviderQuery &query) override;

 private:
  Fetcher fetcher_;
  std::string id_;
  std::chrono::milliseconds timeout_;
  std::string base_;
};

// Replays recorded responses: the last path segment of the URL names a file
// `<dir>/<segment>.json`. Unknown pages fail like a 404 would.
Fetcher RecordedFetcher(std::string dir);

// Live HTTPS fetcher; only present when built with live providers.
Fetcher HttpsFetcher(std::chrono::milliseconds timeout);
bool HttpsFetcherAvailable();

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_WIKIPEDIA_H_
