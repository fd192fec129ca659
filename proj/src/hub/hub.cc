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

#include "convoref/hub/hub.h"

#include <algorithm>

#include <boost/asio/post.hpp>

#include "convoref/common/error.h"
#include "convoref/common/text.h"
#include "convoref/refs/routing.h"

namespace convoref::hub {

Hub::Hub(ingest::SessionManager &sessions, refs::ReferenceEngine &engine,
         HubOptions options)
    : sessions_(sessions),
      engine_(engine),
      options_(std::move(options)),
      pipeline_pool_(std::max<std::size_t>(1, options_.pipeline_threads)),
      select_pool_(std::max<std::size_t>(1, options_.select_threads)) {
  if (!options_.session_log.empty()) {
    log_.open(options_.session_log, std::ios::app);
    if (!log_) {
      throw Error(ErrorCode::kIoError,
                  "cannot open session log " + options_.session_log);
    }
  }
  sessions_.SetListener(this);
  // Sessions opened before the hub existed still get broadcast groups.
  for (const std::string &id : sessions_.SessionIds()) {
    groups_.emplace(id, std::make_shared<Group>(
                            id, boost::asio::make_strand(pipeline_pool_),
                            options_.trace_capacity));
  }
}

Hub::~Hub() {
  pipeline_pool_.join();
  select_pool_.join();
  sessions_.SetListener(nullptr);
}

ingest::SessionState Hub::OpenSession(const ingest::SessionConfig &config) {
  ingest::SessionState state = sessions_.OpenSession(config);
  std::unique_lock lock(groups_mu_);
  groups_.emplace(state.session_id,
                  std::make_shared<Group>(state.session_id,
                                          boost::asio::make_strand(pipeline_pool_),
                                          options_.trace_capacity));
  return state;
}

void Hub::EnsureSession(const std::string &session_id) {
  if (HasSession(session_id)) return;
  ingest::SessionConfig config = options_.default_session;
  config.session_id = session_id;
  try {
    OpenSession(config);
  } catch (const Error &e) {
    // Lost a race with another joiner; the session exists now.
    if (e.code() != ErrorCode::kDuplicateSession) throw;
  }
}

void Hub::CloseSession(const std::string &session_id) {
  std::shared_ptr<Group> group;
  {
    std::unique_lock lock(groups_mu_);
    auto it = groups_.find(session_id);
    if (it == groups_.end()) {
      throw Error(ErrorCode::kSessionNotFound, session_id);
    }
    group = it->second;
    groups_.erase(it);
  }
  sessions_.CloseSession(session_id);
  std::vector<std::shared_ptr<Connection>> members;
  {
    std::lock_guard<std::mutex> lock(group->members_mu);
    members.swap(group->members);
  }
  for (auto &c : members) c->Close(kCloseGoingAway, "session closed");
}

bool Hub::HasSession(std::string_view session_id) const {
  return FindGroup(session_id) != nullptr;
}

std::shared_ptr<Hub::Group> Hub::FindGroup(std::string_view session_id) const {
  std::shared_lock lock(groups_mu_);
  auto it = groups_.find(session_id);
  return it == groups_.end() ? nullptr : it->second;
}

std::shared_ptr<Hub::Group> Hub::RequireGroup(
    std::string_view session_id) const {
  auto group = FindGroup(session_id);
  if (!group) {
    throw Error(ErrorCode::kSessionNotFound,
                "unknown session " + std::string(session_id));
  }
  return group;
}

std::shared_ptr<Connection> Hub::Attach(std::weak_ptr<Transport> transport,
                                        double now_ms) {
  auto conn = std::make_shared<Connection>(
      next_conn_id_.fetch_add(1), std::move(transport), options_.buffer_bound,
      now_ms);
  std::lock_guard<std::mutex> lock(conns_mu_);
  conns_.emplace(conn->id(), conn);
  return conn;
}

void Hub::Detach(const std::shared_ptr<Connection> &connection) {
  {
    std::lock_guard<std::mutex> lock(conns_mu_);
    conns_.erase(connection->id());
  }
  if (auto group = FindGroup(connection->session_id())) {
    std::lock_guard<std::mutex> lock(group->members_mu);
    auto &m = group->members;
    m.erase(std::remove(m.begin(), m.end(), connection), m.end());
  }
}

std::size_t Hub::BroadcastTo(Group &group, const WireMessage &msg) {
  const std::string body = EncodeBody(msg);
  std::vector<std::shared_ptr<Connection>> members;
  {
    std::lock_guard<std::mutex> lock(group.members_mu);
    members = group.members;
  }
  std::size_t delivered = 0;
  bool dropped = false;
  for (const auto &c : members) {
    // A failing connection never stops delivery to the others.
    try {
      if (c->Deliver(body)) {
        ++delivered;
      } else {
        dropped = true;
      }
    } catch (const std::exception &) {
      dropped = true;
    }
  }
  if (dropped) {
    std::lock_guard<std::mutex> lock(group.members_mu);
    auto &m = group.members;
    m.erase(std::remove_if(m.begin(), m.end(),
                           [](const auto &c) { return c->closed(); }),
            m.end());
  }
  Log(body);
  return delivered;
}

std::size_t Hub::Broadcast(const std::string &session_id,
                           const WireMessage &msg) {
  auto group = FindGroup(session_id);
  if (!group) return 0;
  return BroadcastTo(*group, msg);
}

void Hub::Reply(const std::shared_ptr<Connection> &connection,
                const WireMessage &msg) {
  connection->Deliver(msg);
}

void Hub::ReplyError(const std::shared_ptr<Connection> &connection,
                     std::string_view code, std::string detail) {
  Reply(connection,
        MakeError(connection->session_id(), code, std::move(detail)));
}

void Hub::OnFrame(const std::shared_ptr<Connection> &connection,
                  std::string_view frame, double received_at_ms) {
  WireMessage msg;
  try {
    msg = Decode(frame);
  } catch (const Error &e) {
    ReplyError(connection, e.name(), e.what());
    return;
  }

  if (!connection->joined()) {
    if (msg.As<SessionHello>()) {
      HandleHello(connection, msg);
    } else {
      ReplyError(connection, ErrorCodeName(ErrorCode::kHelloRequired),
                 "send session_hello first");
      connection->Close(kCloseProtocolViolation, "hello required");
    }
    return;
  }

  const std::string session_id = connection->session_id();
  if (!msg.session_id.empty() && msg.session_id != session_id) {
    ReplyError(connection, ErrorCodeName(ErrorCode::kForbidden),
               "connection belongs to session " + session_id);
    return;
  }

  if (msg.As<SessionHello>()) {
    ReplyError(connection, ErrorCodeName(ErrorCode::kBadMessage),
               "already joined " + session_id);
  } else if (const auto *t = msg.As<TranscriptUpdate>()) {
    if (connection->role() != Role::kSpeaker) {
      ReplyError(connection, ErrorCodeName(ErrorCode::kForbidden),
                 "only speakers may send transcript updates");
      return;
    }
    if (Trim(t->text).empty()) {
      ReplyError(connection, ErrorCodeName(ErrorCode::kEmptySegment),
                 "transcript text is empty");
      return;
    }
    std::weak_ptr<Connection> weak = connection;
    try {
      SubmitSegment(session_id, t->text, t->is_final, received_at_ms,
                    [this, weak](int64_t, const Error *error) {
                      if (!error) return;
                      if (auto c = weak.lock()) {
                        ReplyError(c, error->name(), error->what());
                      }
                    });
    } catch (const Error &e) {
      ReplyError(connection, e.name(), e.what());
    }
  } else if (const auto *s = msg.As<SelectKeyword>()) {
    HandleSelect(connection, *s, received_at_ms);
  } else if (const auto *p = msg.As<Ping>()) {
    Reply(connection, WireMessage{session_id, -1, Pong{p->nonce, p->sent_at_ms}});
  } else if (const auto *p = msg.As<Pong>()) {
    if (!connection->AcceptPong(p->nonce) && p->nonce.rfind("seq:", 0) == 0) {
      // Clients acknowledge a segment's echo with a pong "seq:<n>".
      try {
        int64_t seq = std::stoll(p->nonce.substr(4));
        if (auto group = FindGroup(session_id)) {
          group->traces.RecordClientEcho(seq, received_at_ms);
        }
      } catch (const std::exception &) {
      }
    }
  } else {
    ReplyError(connection, ErrorCodeName(ErrorCode::kForbidden),
               std::string(msg.type()) + " is sent by the server only");
  }
}

void Hub::HandleHello(const std::shared_ptr<Connection> &connection,
                      const WireMessage &msg) {
  const auto &hello = std::get<SessionHello>(msg.body);
  if (!HasSession(msg.session_id)) {
    if (!options_.create_on_join) {
      Reply(connection,
            MakeError(msg.session_id, ErrorCodeName(ErrorCode::kSessionNotFound),
                      "unknown session " + msg.session_id));
      return;
    }
    try {
      EnsureSession(msg.session_id);
    } catch (const Error &e) {
      Reply(connection, MakeError(msg.session_id, e.name(), e.what()));
      return;
    }
  }
  auto group = FindGroup(msg.session_id);
  if (!group) {
    Reply(connection,
          MakeError(msg.session_id, ErrorCodeName(ErrorCode::kSessionNotFound),
                    "session closed"));
    return;
  }
  std::lock_guard<std::mutex> lock(group->members_mu);
  connection->Join(msg.session_id, hello.role);
  // The acknowledgement is queued before the connection can see any
  // broadcast.
  connection->Deliver(WireMessage{msg.session_id, -1,
                                  SessionHello{hello.role, UnixMs()}});
  group->members.push_back(connection);
}

void Hub::DeliverReference(const std::shared_ptr<Connection> &requester,
                           const std::string &session_id,
                           const refs::ReferenceBundle &bundle) {
  WireMessage ready{session_id, -1,
                    ReferenceReady{bundle.keyword_id, bundle.kind, bundle}};
  if (options_.private_selection) {
    Reply(requester, ready);
  } else {
    Broadcast(session_id, ready);
  }
}

void Hub::HandleSelect(const std::shared_ptr<Connection> &connection,
                       const SelectKeyword &select, double received_at_ms) {
  const std::string session_id = connection->session_id();
  auto ref = engine_.FindKeyword(select.keyword_id);
  // Keyword ids are "<session>:<n>"; other sessions' ids are not visible.
  if (!ref || ref->id.rfind(session_id + ":", 0) != 0) {
    ReplyError(connection, ErrorCodeName(ErrorCode::kKeywordNotFound),
               "unknown keyword " + select.keyword_id);
    return;
  }
  const refs::ReferenceKind kind =
      select.kind ? *select.kind : refs::PlanReferences(ref->category).front();

  if (auto cached = engine_.TryCached(ref->id, kind); cached && cached->ok()) {
    DeliverReference(connection, session_id, *cached);
    std::lock_guard<std::mutex> lock(select_mu_);
    select_cached_ms_.push_back(MonotonicMs() - received_at_ms);
    return;
  }

  TaskStarted();
  std::weak_ptr<Connection> weak = connection;
  boost::asio::post(select_pool_, [this, weak, session_id, id = ref->id, kind] {
    try {
      refs::ReferenceBundle bundle = engine_.ResolveBundle(id, kind);
      auto requester = weak.lock();
      if (bundle.ok()) {
        if (requester || !options_.private_selection) {
          DeliverReference(requester, session_id, bundle);
        }
      } else if (requester) {
        std::string detail = std::string(refs::KindName(kind)) + " for " + id;
        for (const auto &f : bundle.failures) {
          detail += " [" + f.provider_id + ": " + f.reason + "]";
        }
        ReplyError(requester,
                   ErrorCodeName(ErrorCode::kProvidersUnavailable), detail);
      }
    } catch (const Error &e) {
      if (auto requester = weak.lock()) {
        ReplyError(requester, e.name(), e.what());
      }
    } catch (const std::exception &e) {
      if (auto requester = weak.lock()) {
        ReplyError(requester,
                   ErrorCodeName(ErrorCode::kProvidersUnavailable), e.what());
      }
    }
    TaskFinished();
  });
}

void Hub::SubmitSegment(const std::string &session_id, std::string text,
                        bool is_final, double received_at_ms,
                        SubmitDone done) {
  auto group = RequireGroup(session_id);
  std::size_t depth = group->queued.fetch_add(1) + 1;
  std::size_t prev = group->max_queued.load();
  while (depth > prev && !group->max_queued.compare_exchange_weak(prev, depth)) {
  }
  TaskStarted();
  boost::asio::post(
      group->strand, [this, group, session_id, text = std::move(text),
                      is_final, received_at_ms, done = std::move(done)] {
        try {
          auto result = sessions_.PushSegment(session_id, text, is_final,
                                              received_at_ms);
          if (done) done(result.segment.seq, nullptr);
        } catch (const Error &e) {
          if (done) done(-1, &e);
        } catch (const std::exception &e) {
          Error wrapped(ErrorCode::kBadMessage, e.what());
          if (done) done(-1, &wrapped);
        }
        group->processed.fetch_add(1);
        group->queued.fetch_sub(1);
        TaskFinished();
      });
}

void Hub::OnSegment(ingest::SegmentResult &result) {
  auto group = FindGroup(result.segment.session_id);
  if (!group) return;
  const std::string &sid = result.segment.session_id;
  BroadcastTo(*group, WireMessage{sid, -1,
                                  TranscriptUpdate{result.segment.seq,
                                                   result.segment.text,
                                                   result.segment.is_final}});
  if (!result.keywords.empty()) {
    BroadcastTo(*group,
                WireMessage{sid, -1,
                            KeywordsUpdate{result.segment.seq, result.keywords}});
  }
  result.trace.t_broadcast_enqueued = MonotonicMs();
  group->traces.Add(result.trace);
  if (!result.keywords.empty()) engine_.Prefetch(result.keywords);
}

void Hub::Tick(double now_ms) {
  std::vector<std::shared_ptr<Connection>> conns;
  {
    std::lock_guard<std::mutex> lock(conns_mu_);
    for (const auto &[_, c] : conns_) conns.push_back(c);
  }
  for (const auto &c : conns) {
    if (c->closed()) continue;
    if (!c->joined()) {
      if (now_ms - c->attached_at_ms() >= options_.handshake_timeout_ms) {
        c->Close(kCloseHandshakeTimeout, "no session_hello within timeout");
      }
      continue;
    }
    if (options_.heartbeat_interval_ms <= 0 ||
        now_ms - c->last_ping_ms() < options_.heartbeat_interval_ms) {
      continue;
    }
    if (auto nonce = c->NextPing(now_ms, options_.max_missed_pongs)) {
      c->Deliver(WireMessage{c->session_id(), -1, Ping{*nonce, now_ms}});
    } else {
      c->Close(kCloseGoingAway, "heartbeat lost");
    }
  }
  sessions_.FinalizeIdle(now_ms);
}

void Hub::TaskStarted() {
  std::lock_guard<std::mutex> lock(tasks_mu_);
  ++tasks_;
}

void Hub::TaskFinished() {
  std::lock_guard<std::mutex> lock(tasks_mu_);
  if (--tasks_ == 0) tasks_cv_.notify_all();
}

void Hub::Drain() {
  std::unique_lock<std::mutex> lock(tasks_mu_);
  tasks_cv_.wait(lock, [this] { return tasks_ == 0; });
}

LatencyStats Hub::MeasurePipelineLatency(const std::string &session_id,
                                         std::size_t window) const {
  auto group = FindGroup(session_id);
  if (!group) return {};
  return group->traces.IngestToBroadcast(window);
}

std::vector<ingest::LatencyTrace> Hub::Traces(const std::string &session_id,
                                              std::size_t window) const {
  auto group = FindGroup(session_id);
  if (!group) return {};
  return group->traces.Recent(window);
}

PipelineStats Hub::pipeline_stats(const std::string &session_id) const {
  auto group = FindGroup(session_id);
  if (!group) return {};
  return {group->queued.load(), group->max_queued.load(),
          group->processed.load()};
}

LatencyStats Hub::SelectLatency() const {
  std::lock_guard<std::mutex> lock(select_mu_);
  return Summarize(select_cached_ms_);
}

std::size_t Hub::connection_count(const std::string &session_id) const {
  auto group = FindGroup(session_id);
  if (!group) return 0;
  std::lock_guard<std::mutex> lock(group->members_mu);
  return group->members.size();
}

std::size_t Hub::connection_count() const {
  std::lock_guard<std::mutex> lock(conns_mu_);
  return conns_.size();
}

void Hub::Log(const std::string &line) {
  if (options_.session_log.empty()) return;
  std::lock_guard<std::mutex> lock(log_mu_);
  log_ << line << '\n';
  log_.flush();
}

}  // namespace convoref::hub
