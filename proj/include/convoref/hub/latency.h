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

#ifndef CONVOREF_HUB_LATENCY_H_
#define CONVOREF_HUB_LATENCY_H_

#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

#include "convoref/ingest/session.h"
#include "json.hpp"

namespace convoref::hub {

struct LatencyStats {
  std::size_t count = 0;
  double p50 = 0.0;
  double p95 = 0.0;
  double max = 0.0;
  double mean = 0.0;

  nlohmann::json ToJson() const;
};

// Nearest-rank percentile (p in (0, 100]) of an ascending sample list.
double NearestRank(const std::vector<double> &sorted, double p);

// Count, nearest-rank p50/p95, max and mean. Empty input gives count 0.
LatencyStats Summarize(std::vector<double> samples);

// Bounded, thread-safe history of per-segment traces.
class TraceLog {
 public:
  explicit TraceLog(std::size_t capacity = 1 << 16) : capacity_(capacity) {}

  void Add(const ingest::LatencyTrace &trace);

  // Stamps t_client_echo on the trace for `seq` if it is still held.
  bool RecordClientEcho(int64_t seq, double t_ms);

  // The most recent `window` traces (all when window is 0), oldest first.
  std::vector<ingest::LatencyTrace> Recent(std::size_t window = 0) const;

  // Ingest to broadcast-enqueue spans over Recent(window).
  LatencyStats IngestToBroadcast(std::size_t window = 0) const;

  std::size_t size() const;

 private:
  const std::size_t capacity_;
  mutable std::mutex mu_;
  std::deque<ingest::LatencyTrace> traces_;
};

}  // namespace convoref::hub

#endif  // CONVOREF_HUB_LATENCY_H_
