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

#ifndef CONVOREF_INGEST_REPLAY_H_
#define CONVOREF_INGEST_REPLAY_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace convoref::ingest {

// Reads a replay script: UTF-8, one utterance per line, lines whose first
// non-blank character is '#' and blank lines are skipped.
// Throws Error(kIoError) if the file cannot be read.
std::vector<std::string> ReadScript(const std::string &path);

// Same as ReadScript, over in-memory text.
std::vector<std::string> ParseScript(std::string_view text);

struct PlannedSegment {
  double offset_ms = 0.0;  // from replay start
  std::string text;        // cumulative utterance prefix
  bool is_final = false;
  std::size_t utterance = 0;
};

struct ReplayPlan {
  std::vector<PlannedSegment> segments;
  double word_ms = 0.0;  // 60000 / words_per_min
  double tick_ms = 0.0;  // 60000 / updates_per_min
  bool continuous = false;
  std::size_t words = 0;

  double span_ms() const {
    return segments.empty() ? 0.0 : segments.back().offset_ms;
  }
  // Emission rate implied by the schedule, segments per minute.
  double PlannedRatePerMin() const;
};

// Builds the emission schedule.
//
// Continuous mode (an update tick is shorter than a word): every tick emits
// one segment. An utterance of n words occupies m = max(1, round(n*word/tick))
// ticks; tick j < m-1 carries the prefix of min(n, floor(j*tick/word)+1)
// words as an intermediate, and tick m-1 carries the whole line as final.
//
// Single mode (otherwise): one final per utterance, emitted once the
// utterance has been spoken and at least one tick after the previous one.
//
// Throws Error(kConfigInvalid) unless both rates are positive and finite.
ReplayPlan PlanReplay(const std::vector<std::string> &utterances,
                      double words_per_min, double updates_per_min);

struct ReplayStats {
  std::size_t segments = 0;
  std::size_t finals = 0;
  std::size_t words = 0;
  double first_emit_ms = 0.0;  // wall time, relative to run start
  double last_emit_ms = 0.0;
  double max_lag_ms = 0.0;     // worst emission lateness vs. schedule

  // Measured segments per minute between the first and last emission,
  // scaled back to script time.
  double rate_per_min = 0.0;
};

using SegmentSink = std::function<void(const PlannedSegment &)>;

struct ReplayOptions {
  // >1 replays faster than real time; the schedule is divided by it.
  double time_scale = 1.0;
  // Optional cancellation flag polled between segments.
  const std::atomic<bool> *cancel = nullptr;
};

// Emits the plan to `sink` on the wall clock. Returns when the plan is
// exhausted or cancelled. Exceptions thrown by the sink propagate.
ReplayStats RunReplay(const ReplayPlan &plan, const SegmentSink &sink,
                      const ReplayOptions &options = {});

}  // namespace convoref::ingest

#endif  // CONVOREF_INGEST_REPLAY_H_
