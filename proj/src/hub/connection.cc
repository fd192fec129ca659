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

#include "convoref/hub/connection.h"

#include <algorithm>

namespace convoref::hub {

Connection::Connection(uint64_t id, std::weak_ptr<Transport> transport,
                       std::size_t buffer_bound, double attached_at_ms)
    : id_(id),
      transport_(std::move(transport)),
      bound_(buffer_bound),
      attached_at_ms_(attached_at_ms),
      last_ping_ms_(attached_at_ms) {}

bool Connection::Deliver(const std::string &encoded_body) {
  bool overflow = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (closed_) return false;
    if (outbox_.size() < bound_) {
      outbox_.push_back(WithDeliveryIndex(encoded_body, next_index_++));
      max_queued_ = std::max(max_queued_, outbox_.size());
    } else {
      overflow = true;
      closed_ = true;
      close_code_ = kCloseSlowConsumer;
      outbox_.clear();
    }
  }
  auto t = transport_.lock();
  if (overflow) {
    if (t) t->Close(kCloseSlowConsumer, "slow consumer");
    return false;
  }
  if (t) t->Wake();
  return true;
}

std::optional<std::string> Connection::PopFrame() {
  std::lock_guard<std::mutex> lock(mu_);
  if (outbox_.empty()) return std::nullopt;
  std::string frame = std::move(outbox_.front());
  outbox_.pop_front();
  return frame;
}

void Connection::Close(int code, const std::string &reason) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (closed_) return;
    closed_ = true;
    close_code_ = code;
    if (code == kCloseSlowConsumer) outbox_.clear();
  }
  if (auto t = transport_.lock()) t->Close(code, reason);
}

bool Connection::closed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return closed_;
}

std::optional<int> Connection::close_code() const {
  std::lock_guard<std::mutex> lock(mu_);
  return close_code_;
}

std::size_t Connection::queued() const {
  std::lock_guard<std::mutex> lock(mu_);
  return outbox_.size();
}

std::size_t Connection::max_queued() const {
  std::lock_guard<std::mutex> lock(mu_);
  return max_queued_;
}

int64_t Connection::delivered() const {
  std::lock_guard<std::mutex> lock(mu_);
  return next_index_;
}

void Connection::Join(std::string session_id, Role role) {
  std::lock_guard<std::mutex> lock(mu_);
  joined_ = true;
  session_id_ = std::move(session_id);
  role_ = role;
}

bool Connection::joined() const {
  std::lock_guard<std::mutex> lock(mu_);
  return joined_;
}

std::string Connection::session_id() const {
  std::lock_guard<std::mutex> lock(mu_);
  return session_id_;
}

Role Connection::role() const {
  std::lock_guard<std::mutex> lock(mu_);
  return role_;
}

std::optional<std::string> Connection::NextPing(double now_ms,
                                                int max_missed) {
  std::lock_guard<std::mutex> lock(mu_);
  if (missed_pongs_ >= max_missed) return std::nullopt;
  ++missed_pongs_;
  last_ping_ms_ = now_ms;
  outstanding_nonce_ = "hb-" + std::to_string(id_) + "-" +
                       std::to_string(++ping_counter_);
  return outstanding_nonce_;
}

bool Connection::AcceptPong(const std::string &nonce) {
  std::lock_guard<std::mutex> lock(mu_);
  if (nonce.empty() || nonce != outstanding_nonce_) return false;
  missed_pongs_ = 0;
  outstanding_nonce_.clear();
  return true;
}

double Connection::last_ping_ms() const {
  std::lock_guard<std::mutex> lock(mu_);
  return last_ping_ms_;
}

}  // namespace convoref::hub
