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

#include <random>

#include "doctest.h"
#include "support/oracles.h"

namespace convoref::hub {
namespace {

TEST_CASE("Empty window gives count zero") {
  LatencyStats s = Summarize({});
  CHECK(s.count == 0);
  TraceLog log;
  CHECK(log.IngestToBroadcast().count == 0);
}

TEST_CASE("Known spans give hand-computed percentiles") {
  // Sorted: 1..20. Nearest rank: p50 -> ceil(10) = 10th = 10,
  // p95 -> ceil(19) = 19th = 19.
  std::vector<double> spans;
  for (int i = 20; i >= 1; --i) spans.push_back(i);
  LatencyStats s = Summarize(spans);
  CHECK(s.count == 20);
  CHECK(s.p50 == 10);
  CHECK(s.p95 == 19);
  CHECK(s.max == 20);
  CHECK(s.mean == doctest::Approx(10.5));

  // Small lists: p95 of 3 values -> ceil(2.85) = 3rd.
  LatencyStats t = Summarize({0.4, 0.1, 0.2});
  CHECK(t.p50 == 0.2);
  CHECK(t.p95 == 0.4);
  CHECK(Summarize({7.0}).p95 == 7.0);
}

TEST_CASE("Percentiles agree with the independent oracle") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(0, 50);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(1 + trial);
    for (double &x : v) x = d(rng);
    LatencyStats s = Summarize(v);
    CHECK(s.p50 == testing::NearestRank(v, 50));
    CHECK(s.p95 == testing::NearestRank(v, 95));
  }
}

TEST_CASE("Trace log windows and client echoes") {
  TraceLog log(4);
  for (int i = 0; i < 6; ++i) {
    ingest::LatencyTrace t;
    t.seq = i;
    t.t_ingest = 100.0 * i;
    t.t_extract_done = t.t_ingest + 1;
    t.t_broadcast_enqueued = t.t_ingest + i;
    log.Add(t);
  }
  CHECK(log.size() == 4);
  auto recent = log.Recent(2);
  REQUIRE(recent.size() == 2);
  CHECK(recent[0].seq == 4);
  CHECK(recent[1].seq == 5);
  LatencyStats s = log.IngestToBroadcast();
  CHECK(s.count == 4);
  CHECK(s.max == 5);
  CHECK(log.RecordClientEcho(3, 999));
  CHECK_FALSE(log.RecordClientEcho(0, 999));
  CHECK(log.Recent()[1].t_client_echo == 999);
}

}  // namespace
}  // namespace convoref::hub
