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

#include "convoref/hub/latency.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace convoref::hub {

nlohmann::json LatencyStats::ToJson() const {
  return {{"count", count}, {"p50", p50}, {"p95", p95},
          {"max", max},     {"mean", mean}};
}

double NearestRank(const std::vector<double> &sorted, double p) {
  if (sorted.empty()) return 0.0;
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * sorted.size()));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

LatencyStats Summarize(std::vector<double> samples) {
  LatencyStats s;
  s.count = samples.size();
  if (samples.empty()) return s;
  std::sort(samples.begin(), samples.end());
  s.p50 = NearestRank(samples, 50);
  s.p95 = NearestRank(samples, 95);
  s.max = samples.back();
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
           static_cast<double>(samples.size());
  return s;
}

void TraceLog::Add(const ingest::LatencyTrace &trace) {
  std::lock_guard<std::mutex> lock(mu_);
  traces_.push_back(trace);
  while (traces_.size() > capacity_) traces_.pop_front();
}

bool TraceLog::RecordClientEcho(int64_t seq, double t_ms) {
  std::lock_guard<std::mutex> lock(mu_);
  // Traces are appended in seq order, so search from the back.
  for (auto it = traces_.rbegin(); it != traces_.rend(); ++it) {
    if (it->seq == seq) {
      if (std::isnan(it->t_client_echo)) it->t_client_echo = t_ms;
      return true;
    }
    if (it->seq < seq) break;
  }
  return false;
}

std::vector<ingest::LatencyTrace> TraceLog::Recent(std::size_t window) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t n = window == 0 ? traces_.size() : std::min(window, traces_.size());
  return {traces_.end() - static_cast<std::ptrdiff_t>(n), traces_.end()};
}

LatencyStats TraceLog::IngestToBroadcast(std::size_t window) const {
  std::vector<double> spans;
  for (const auto &t : Recent(window)) {
    double span = t.IngestToBroadcastMs();
    if (std::isfinite(span)) spans.push_back(span);
  }
  return Summarize(std::move(spans));
}

std::size_t TraceLog::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return traces_.size();
}

}  // namespace convoref::hub
