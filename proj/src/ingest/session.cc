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

#include "convoref/ingest/session.h"

#include "convoref/common/clock.h"
#include "convoref/common/error.h"
#include "convoref/common/text.h"

namespace convoref::ingest {

SessionManager::SessionManager(IngestOptions options)
    : options_(std::move(options)) {}

SessionState SessionManager::OpenSession(const SessionConfig &config) {
  auto session = std::make_shared<Session>();
  const auto &params = config.params;
  std::string gazetteer_path =
      params.gazetteer_path.empty() ? options_.gazetteer_path
                                    : params.gazetteer_path;
  std::shared_ptr<const nlp::GazetteerSet> gazetteers =
      gazetteer_path.empty() ? std::make_shared<const nlp::GazetteerSet>()
                             : nlp::GazetteerSet::Shared(gazetteer_path);
  session->extractor = std::make_unique<nlp::KeywordExtractor>(
      nlp::Lexicon::ForLanguage(config.language, params.stopword_path),
      std::move(gazetteers), params);

  std::unique_lock lock(mu_);
  std::string id = config.session_id;
  if (id.empty()) {
    do {
      id = "s" + std::to_string(++generated_ids_);
    } while (sessions_.count(id));
  }
  if (sessions_.count(id)) {
    throw Error(ErrorCode::kDuplicateSession, "session exists: " + id);
  }
  session->state.session_id = id;
  session->state.created_at_ms = MonotonicMs();
  session->state.language = config.language;
  sessions_.emplace(id, session);
  return session->state;
}

void SessionManager::CloseSession(std::string_view session_id) {
  std::shared_ptr<Session> session;
  {
    std::unique_lock lock(mu_);
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) {
      throw Error(ErrorCode::kSessionNotFound, std::string(session_id));
    }
    session = it->second;
    sessions_.erase(it);
  }
  std::lock_guard<std::mutex> lock(session->mu);
  session->closed = true;
}

std::shared_ptr<SessionManager::Session> SessionManager::Find(
    std::string_view session_id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kSessionNotFound, std::string(session_id));
  }
  return it->second;
}

bool SessionManager::HasSession(std::string_view session_id) const {
  std::shared_lock lock(mu_);
  return sessions_.find(session_id) != sessions_.end();
}

std::vector<std::string> SessionManager::SessionIds() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> ids;
  for (const auto &[id, _] : sessions_) ids.push_back(id);
  return ids;
}

SessionState SessionManager::Snapshot(std::string_view session_id) const {
  auto session = Find(session_id);
  std::lock_guard<std::mutex> lock(session->mu);
  return session->state;
}

SegmentResult SessionManager::PushSegment(std::string_view session_id,
                                          std::string_view text, bool is_final,
                                          std::optional<double> received_at_ms) {
  const double t_ingest = received_at_ms ? *received_at_ms : MonotonicMs();
  if (Trim(text).empty()) {
    throw Error(ErrorCode::kEmptySegment,
                "segment for " + std::string(session_id) + " has no text");
  }
  auto session = Find(session_id);
  std::lock_guard<std::mutex> lock(session->mu);
  if (session->closed) {
    throw Error(ErrorCode::kSessionNotFound, std::string(session_id));
  }
  SessionState &state = session->state;

  SegmentResult result;
  result.segment.session_id = state.session_id;
  result.segment.seq = state.next_seq++;
  result.segment.text = std::string(text);
  result.segment.is_final = is_final;
  result.segment.received_at_ms = t_ingest;
  result.trace.seq = result.segment.seq;
  result.trace.t_ingest = t_ingest;

  result.keywords = session->extractor->Extract(text, session->emitted);
  for (nlp::Keyword &kw : result.keywords) {
    kw.id = state.session_id + ":" + std::to_string(session->next_keyword++);
    kw.source_seq = result.segment.seq;
    session->emitted.insert(kw.normalized);
    state.emitted_keywords.insert(kw.normalized);
  }
  result.trace.t_extract_done = MonotonicMs();

  state.utterance_buffer = is_final ? std::string() : std::string(text);
  state.last_segment_at_ms = t_ingest;

  if (listener_) listener_->OnSegment(result);
  return result;
}

std::vector<std::string> SessionManager::FinalizeIdle(double now_ms) {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::shared_lock lock(mu_);
    for (const auto &[_, s] : sessions_) all.push_back(s);
  }
  std::vector<std::string> finalized;
  for (const auto &session : all) {
    std::lock_guard<std::mutex> lock(session->mu);
    SessionState &state = session->state;
    if (state.utterance_buffer.empty()) continue;
    if (now_ms - state.last_segment_at_ms < options_.idle_timeout_ms) continue;
    // Extraction already ran on this text as an intermediate; finalizing
    // only closes the utterance.
    state.utterance_buffer.clear();
    finalized.push_back(state.session_id);
  }
  return finalized;
}

}  // namespace convoref::ingest
