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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "convoref/refs/wikipedia.h"

namespace convoref::refs {

Fetcher HttpsFetcher(std::chrono::milliseconds timeout) {
  return [timeout](const std::string &url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ProviderError("bad url " + url);
    auto path_begin = url.find('/', scheme_end + 3);
    std::string origin = url.substr(0, path_begin);
    std::string path =
        path_begin == std::string::npos ? "/" : url.substr(path_begin);
    httplib::Client client(origin);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_follow_location(true);
    httplib::Headers headers = {
        {"User-Agent", "convoref/0.1 (reference prefetcher)"},
        {"Accept", "application/json"}};
    auto res = client.Get(path, headers);
    if (!res) {
      throw ProviderError("fetch failed for " + url + ": " +
                          httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw ProviderError("HTTP " + std::to_string(res->status) + " for " +
                          url);
    }
    return res->body;
  };
}

bool HttpsFetcherAvailable() { return true; }

}  // namespace convoref::refs
