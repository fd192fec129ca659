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

#ifndef CONVOREF_HUB_CONNECTION_H_
#define CONVOREF_HUB_CONNECTION_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "convoref/hub/wire.h"

namespace convoref::hub {

// The network side of a connection (a WebSocket session, or a test double).
class Transport {
 public:
  virtual ~Transport() = default;

  // Frames are waiting in the connection's outbox. Must not block; the
  // transport drains them with Connection::PopFrame() when it can write.
  virtual void Wake() = 0;

  // Write whatever is still queued, then close with `code`. Idempotent.
  virtual void Close(int code, const std::string &reason) = 0;
};

// Hub-side state of one client: session membership, the bounded outbox and
// heartbeat bookkeeping. Thread-safe.
class Connection {
 public:
  Connection(uint64_t id, std::weak_ptr<Transport> transport,
             std::size_t buffer_bound, double attached_at_ms);

  uint64_t id() const { return id_; }
  double attached_at_ms() const { return attached_at_ms_; }

  // Stamps the next delivery index on an EncodeBody() result and queues it.
  // If the outbox already holds `buffer_bound` frames the connection is
  // closed with kCloseSlowConsumer instead. Returns false when the frame was
  // not queued.
  bool Deliver(const std::string &encoded_body);
  bool Deliver(const WireMessage &msg) { return Deliver(EncodeBody(msg)); }

  // Next frame for the transport to write, oldest first.
  std::optional<std::string> PopFrame();

  // Marks the connection closed and asks the transport to close. A
  // slow-consumer close discards the backlog; other closes flush it.
  void Close(int code, const std::string &reason);

  bool closed() const;
  std::optional<int> close_code() const;
  std::size_t queued() const;
  std::size_t max_queued() const;
  int64_t delivered() const;

  // Session membership.
  void Join(std::string session_id, Role role);
  bool joined() const;
  std::string session_id() const;
  Role role() const;

  // Heartbeat bookkeeping. Returns the nonce to send, or nullopt if the
  // connection has missed `max_missed` pings and should be dropped.
  std::optional<std::string> NextPing(double now_ms, int max_missed);
  // Clears the missed count if `nonce` answers the outstanding ping.
  bool AcceptPong(const std::string &nonce);
  double last_ping_ms() const;

 private:
  const uint64_t id_;
  const std::weak_ptr<Transport> transport_;
  const std::size_t bound_;
  const double attached_at_ms_;

  mutable std::mutex mu_;
  std::deque<std::string> outbox_;
  std::size_t max_queued_ = 0;
  int64_t next_index_ = 0;
  bool closed_ = false;
  std::optional<int> close_code_;

  bool joined_ = false;
  std::string session_id_;
  Role role_ = Role::kViewer;

  double last_ping_ms_;
  int missed_pongs_ = 0;
  uint64_t ping_counter_ = 0;
  std::string outstanding_nonce_;
};

}  // namespace convoref::hub

#endif  // CONVOREF_HUB_CONNECTION_H_
