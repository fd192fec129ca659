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

#ifndef CONVOREF_INGEST_SESSION_H_
#define CONVOREF_INGEST_SESSION_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "convoref/nlp/extractor.h"
#include "convoref/nlp/types.h"

namespace convoref::ingest {

struct SessionConfig {
  // Generated ("s1", "s2", ...) when empty.
  std::string session_id;
  std::string language = "en";
  nlp::ExtractionParams params;
};

// One recognition result. `text` is the cumulative text of the current
// utterance; `received_at_ms` is on the MonotonicMs() timeline.
struct TranscriptSegment {
  std::string session_id;
  int64_t seq = 0;
  std::string text;
  bool is_final = false;
  double received_at_ms = 0.0;
};

// Stage timestamps for one segment, MonotonicMs() milliseconds. Stages not
// reached yet are NaN.
struct LatencyTrace {
  int64_t seq = 0;
  double t_ingest = NAN;
  double t_extract_done = NAN;
  double t_broadcast_enqueued = NAN;
  double t_client_echo = NAN;

  double IngestToBroadcastMs() const { return t_broadcast_enqueued - t_ingest; }
};

// Snapshot of a session's bookkeeping.
struct SessionState {
  std::string session_id;
  int64_t next_seq = 0;
  std::set<std::string> emitted_keywords;
  std::string utterance_buffer;
  double created_at_ms = 0.0;
  double last_segment_at_ms = 0.0;
  std::string language;
};

struct SegmentResult {
  TranscriptSegment segment;
  // Keywords new to the session, ids and source_seq assigned.
  std::vector<nlp::Keyword> keywords;
  LatencyTrace trace;
};

// Receives every processed segment, in seq order per session, while the
// session is still locked. Implementations must not block.
class SegmentListener {
 public:
  virtual ~SegmentListener() = default;
  virtual void OnSegment(SegmentResult &result) = 0;
};

struct IngestOptions {
  // Intermediate utterances idle this long are force-finalized.
  double idle_timeout_ms = 5000.0;
  // Default gazetteer when a session's params name none.
  std::string gazetteer_path;
};

// Session registry and the per-segment extraction driver.
//
// Sessions are independent and may ingest concurrently; segments within one
// session are processed strictly one at a time in seq order.
class SessionManager {
 public:
  explicit SessionManager(IngestOptions options);

  // Throws Error(kDuplicateSession) if the id is taken and
  // Error(kConfigInvalid) for bad language or params.
  SessionState OpenSession(const SessionConfig &config);

  // Throws Error(kSessionNotFound).
  void CloseSession(std::string_view session_id);

  bool HasSession(std::string_view session_id) const;
  std::vector<std::string> SessionIds() const;

  // Throws Error(kSessionNotFound).
  SessionState Snapshot(std::string_view session_id) const;

  // Assigns the next seq, runs one extraction over `text` alone, records
  // new keywords as emitted and hands the result to the listener.
  // Throws Error(kSessionNotFound) or Error(kEmptySegment).
  SegmentResult PushSegment(std::string_view session_id, std::string_view text,
                            bool is_final,
                            std::optional<double> received_at_ms = {});

  // Finalizes utterances whose last intermediate is older than the idle
  // timeout. Returns the affected session ids.
  std::vector<std::string> FinalizeIdle(double now_ms);

  // Not owned. Set before any segments flow.
  void SetListener(SegmentListener *listener) { listener_ = listener; }

  const IngestOptions &options() const { return options_; }

 private:
  struct Session {
    std::mutex mu;
    SessionState state;
    std::unordered_set<std::string> emitted;
    std::unique_ptr<nlp::KeywordExtractor> extractor;
    int64_t next_keyword = 0;
    bool closed = false;
  };

  std::shared_ptr<Session> Find(std::string_view session_id) const;

  IngestOptions options_;
  SegmentListener *listener_ = nullptr;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  int64_t generated_ids_ = 0;
};

}  // namespace convoref::ingest

#endif  // CONVOREF_INGEST_SESSION_H_
