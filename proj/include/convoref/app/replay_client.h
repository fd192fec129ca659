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

#ifndef CONVOREF_APP_REPLAY_CLIENT_H_
#define CONVOREF_APP_REPLAY_CLIENT_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convoref/ingest/replay.h"
#include "json.hpp"

namespace convoref::app {

struct ReplayClientOptions {
  std::string url = "ws://127.0.0.1:8765/ws";
  std::string session_id = "replay";
  double words_per_min = 110.0;
  double updates_per_min = 360.0;
  double time_scale = 1.0;
  // How long to keep listening after the last segment for trailing
  // keyword updates.
  std::chrono::milliseconds linger{1000};
  std::chrono::milliseconds connect_timeout{5000};
  const std::atomic<bool> *cancel = nullptr;
};

struct ReplaySummary {
  std::size_t segments_sent = 0;
  std::size_t finals = 0;
  std::size_t words = 0;
  double seconds = 0.0;
  double rate_per_min = 0.0;
  double planned_rate_per_min = 0.0;
  double max_lag_ms = 0.0;
  // Transcript echoes received back from the hub.
  std::size_t echoes = 0;
  // Distinct keyword phrases observed, in arrival order.
  std::vector<std::string> keywords;
  std::vector<std::string> keyword_categories;
  // Error codes the hub sent back.
  std::vector<std::string> errors;

  nlohmann::json ToJson() const;  // carries "schema": 1
  std::string ToText() const;
};

// Connects to a hub as a speaker, streams the plan on the wall clock, and
// acknowledges every transcript echo with a pong "seq:<n>" so the hub can
// record the round trip. Throws Error(kIoError) if the hub is unreachable
// or the connection drops mid-run.
ReplaySummary ReplayToHub(const ingest::ReplayPlan &plan,
                          const ReplayClientOptions &options);

}  // namespace convoref::app

#endif  // CONVOREF_APP_REPLAY_CLIENT_H_
