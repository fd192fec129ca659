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

#ifndef CONVOREF_HUB_HUB_H_
#define CONVOREF_HUB_HUB_H_

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <boost/asio/strand.hpp>
#include <boost/asio/thread_pool.hpp>

#include "convoref/common/clock.h"
#include "convoref/common/error.h"
#include "convoref/hub/connection.h"
#include "convoref/hub/latency.h"
#include "convoref/hub/wire.h"
#include "convoref/ingest/session.h"
#include "convoref/refs/reference_engine.h"

namespace convoref::hub {

struct HubOptions {
  // Frames queued per connection before it is dropped as a slow consumer.
  std::size_t buffer_bound = 256;
  double handshake_timeout_ms = 5000;
  // 0 disables heartbeats.
  double heartbeat_interval_ms = 15000;
  int max_missed_pongs = 2;
  // Unknown session ids in session_hello create the session.
  bool create_on_join = true;
  // Send reference_ready only to the requester instead of the session.
  bool private_selection = false;
  std::size_t pipeline_threads = 1;
  std::size_t select_threads = 2;
  // Append every broadcast to this JSON-lines file when set.
  std::string session_log;
  std::size_t trace_capacity = 1 << 16;
  // Extraction settings for sessions created on join.
  ingest::SessionConfig default_session;
};

struct PipelineStats {
  std::size_t queued = 0;      // submitted, not yet finished
  std::size_t max_queued = 0;  // high-water mark of `queued`
  uint64_t processed = 0;
};

// Session fan-out and protocol handling, independent of the transport.
//
// Transcript segments are processed on a per-session strand, so each
// session's segments run one at a time in arrival order while different
// sessions proceed in parallel. Every processed segment is echoed as a
// transcript_update, followed by a keywords_update when it produced new
// keywords; reference prefetch for those keywords is handed to the engine's
// background pool and never delays the broadcast.
class Hub : public ingest::SegmentListener {
 public:
  Hub(ingest::SessionManager &sessions, refs::ReferenceEngine &engine,
      HubOptions options = {});
  ~Hub() override;

  Hub(const Hub &) = delete;
  Hub &operator=(const Hub &) = delete;

  // Opens a session and its broadcast group. Throws like
  // SessionManager::OpenSession.
  ingest::SessionState OpenSession(const ingest::SessionConfig &config);
  // Opens `session_id` with default settings unless it exists.
  void EnsureSession(const std::string &session_id);
  // Closes the session and its connections. Throws Error(kSessionNotFound).
  void CloseSession(const std::string &session_id);
  bool HasSession(std::string_view session_id) const;

  std::shared_ptr<Connection> Attach(std::weak_ptr<Transport> transport,
                                     double now_ms = MonotonicMs());
  void Detach(const std::shared_ptr<Connection> &connection);

  // Handles one inbound text frame. Never throws; protocol problems are
  // answered with error messages.
  void OnFrame(const std::shared_ptr<Connection> &connection,
               std::string_view frame, double received_at_ms = MonotonicMs());

  // Enforces the hello deadline and heartbeats, and finalizes stalled
  // utterances. Call periodically.
  void Tick(double now_ms);

  using SubmitDone = std::function<void(int64_t seq, const Error *error)>;

  // Queues a segment on the session's pipeline strand. Throws
  // Error(kSessionNotFound) if the session is unknown at submit time.
  void SubmitSegment(const std::string &session_id, std::string text,
                     bool is_final, double received_at_ms = MonotonicMs(),
                     SubmitDone done = {});

  // Queues `msg` to every live connection of the session. Returns how many
  // accepted it.
  std::size_t Broadcast(const std::string &session_id, const WireMessage &msg);

  // Waits until all submitted segments and selections are handled.
  void Drain();

  LatencyStats MeasurePipelineLatency(const std::string &session_id,
                                      std::size_t window = 0) const;
  std::vector<ingest::LatencyTrace> Traces(const std::string &session_id,
                                           std::size_t window = 0) const;
  PipelineStats pipeline_stats(const std::string &session_id) const;
  // Server-side handling time of selections answered from the cache.
  LatencyStats SelectLatency() const;
  std::size_t connection_count(const std::string &session_id) const;
  std::size_t connection_count() const;

  void OnSegment(ingest::SegmentResult &result) override;

  const HubOptions &options() const { return options_; }

 private:
  using Strand = boost::asio::strand<boost::asio::thread_pool::executor_type>;

  struct Group {
    Group(std::string id, Strand strand, std::size_t trace_capacity)
        : id(std::move(id)), strand(std::move(strand)), traces(trace_capacity) {}
    const std::string id;
    Strand strand;
    TraceLog traces;
    std::mutex members_mu;
    std::vector<std::shared_ptr<Connection>> members;
    std::atomic<std::size_t> queued{0};
    std::atomic<std::size_t> max_queued{0};
    std::atomic<uint64_t> processed{0};
  };

  std::shared_ptr<Group> FindGroup(std::string_view session_id) const;
  std::shared_ptr<Group> RequireGroup(std::string_view session_id) const;
  std::size_t BroadcastTo(Group &group, const WireMessage &msg);
  void Reply(const std::shared_ptr<Connection> &connection,
             const WireMessage &msg);
  void ReplyError(const std::shared_ptr<Connection> &connection,
                  std::string_view code, std::string detail);

  void HandleHello(const std::shared_ptr<Connection> &connection,
                   const WireMessage &msg);
  void HandleSelect(const std::shared_ptr<Connection> &connection,
                    const SelectKeyword &select, double received_at_ms);
  void DeliverReference(const std::shared_ptr<Connection> &requester,
                        const std::string &session_id,
                        const refs::ReferenceBundle &bundle);
  void Log(const std::string &line);
  void TaskStarted();
  void TaskFinished();

  ingest::SessionManager &sessions_;
  refs::ReferenceEngine &engine_;
  const HubOptions options_;

  mutable std::shared_mutex groups_mu_;
  std::map<std::string, std::shared_ptr<Group>, std::less<>> groups_;

  mutable std::mutex conns_mu_;
  std::map<uint64_t, std::shared_ptr<Connection>> conns_;
  std::atomic<uint64_t> next_conn_id_{1};

  mutable std::mutex select_mu_;
  std::vector<double> select_cached_ms_;

  std::mutex log_mu_;
  std::ofstream log_;

  std::mutex tasks_mu_;
  std::condition_variable tasks_cv_;
  std::size_t tasks_ = 0;

  boost::asio::thread_pool pipeline_pool_;
  boost::asio::thread_pool select_pool_;
};

}  // namespace convoref::hub

#endif  // CONVOREF_HUB_HUB_H_
