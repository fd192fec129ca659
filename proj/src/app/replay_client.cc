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

#include "convoref/app/replay_client.h"

#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>

#include "convoref/common/error.h"
#include "convoref/hub/wire.h"
#include "convoref/hub/ws_client.h"

namespace convoref::app {
namespace {

// State shared with the client's I/O thread.
struct Observer {
  std::mutex mu;
  std::condition_variable cv;
  bool joined = false;
  std::optional<int> close_code;
  std::size_t echoes = 0;
  std::set<std::string> seen;
  std::vector<std::string> keywords;
  std::vector<std::string> categories;
  std::vector<std::string> errors;
};

}  // namespace

ReplaySummary ReplayToHub(const ingest::ReplayPlan &plan,
                          const ReplayClientOptions &options) {
  Observer obs;
  hub::WsClient client;
  client.OnFrame([&](const std::string &frame) {
    hub::WireMessage msg;
    try {
      msg = hub::Decode(frame);
    } catch (const Error &) {
      return;
    }
    std::lock_guard<std::mutex> lock(obs.mu);
    if (msg.As<hub::SessionHello>()) {
      obs.joined = true;
      obs.cv.notify_all();
    } else if (const auto *t = msg.As<hub::TranscriptUpdate>()) {
      ++obs.echoes;
      client.Send(hub::Encode(hub::WireMessage{
          options.session_id, -1,
          hub::Pong{"seq:" + std::to_string(t->seq), 0}}));
    } else if (const auto *k = msg.As<hub::KeywordsUpdate>()) {
      for (const auto &kw : k->keywords) {
        if (obs.seen.insert(kw.phrase).second) {
          obs.keywords.push_back(kw.phrase);
          obs.categories.emplace_back(nlp::CategoryName(kw.category));
        }
      }
    } else if (const auto *p = msg.As<hub::Ping>()) {
      client.Send(hub::Encode(hub::WireMessage{
          options.session_id, -1, hub::Pong{p->nonce, p->sent_at_ms}}));
    } else if (const auto *e = msg.As<hub::ErrorMsg>()) {
      obs.errors.push_back(e->code);
      if (!obs.joined) obs.cv.notify_all();
    }
  });
  client.OnClose([&](int code, const std::string &) {
    std::lock_guard<std::mutex> lock(obs.mu);
    obs.close_code = code;
    obs.cv.notify_all();
  });

  client.Connect(options.url, options.connect_timeout);
  client.Send(hub::Encode(hub::WireMessage{
      options.session_id, -1, hub::SessionHello{hub::Role::kSpeaker, 0}}));
  {
    std::unique_lock<std::mutex> lock(obs.mu);
    obs.cv.wait_for(lock, options.connect_timeout, [&] {
      return obs.joined || obs.close_code || !obs.errors.empty();
    });
    if (!obs.joined) {
      std::string why = obs.errors.empty() ? "no acknowledgement"
                                           : obs.errors.front();
      throw Error(ErrorCode::kIoError, "could not join session " +
                                           options.session_id + ": " + why);
    }
  }

  ingest::ReplayOptions run_opts;
  run_opts.time_scale = options.time_scale;
  run_opts.cancel = options.cancel;
  ingest::ReplayStats stats = ingest::RunReplay(
      plan,
      [&](const ingest::PlannedSegment &seg) {
        {
          std::lock_guard<std::mutex> lock(obs.mu);
          if (obs.close_code) {
            throw Error(ErrorCode::kIoError,
                        "hub closed the connection with code " +
                            std::to_string(*obs.close_code));
          }
        }
        client.Send(hub::Encode(hub::WireMessage{
            options.session_id, -1,
            hub::TranscriptUpdate{-1, seg.text, seg.is_final}}));
      },
      run_opts);

  {
    // Wait for the echoes of everything sent, then linger for stragglers.
    std::unique_lock<std::mutex> lock(obs.mu);
    obs.cv.wait_for(lock, options.linger, [&] {
      return obs.close_code.has_value();
    });
  }
  client.Close();

  ReplaySummary s;
  s.segments_sent = stats.segments;
  s.finals = stats.finals;
  s.words = stats.words;
  s.seconds = (stats.last_emit_ms - stats.first_emit_ms) / 1000.0;
  s.rate_per_min = stats.rate_per_min;
  s.planned_rate_per_min = plan.PlannedRatePerMin();
  s.max_lag_ms = stats.max_lag_ms;
  std::lock_guard<std::mutex> lock(obs.mu);
  s.echoes = obs.echoes;
  s.keywords = obs.keywords;
  s.keyword_categories = obs.categories;
  s.errors = obs.errors;
  return s;
}

nlohmann::json ReplaySummary::ToJson() const {
  nlohmann::json kws = nlohmann::json::array();
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    kws.push_back({{"phrase", keywords[i]}, {"category", keyword_categories[i]}});
  }
  return {{"schema", 1},
          {"segments_sent", segments_sent},
          {"finals", finals},
          {"words", words},
          {"seconds", seconds},
          {"rate_per_min", rate_per_min},
          {"planned_rate_per_min", planned_rate_per_min},
          {"max_lag_ms", max_lag_ms},
          {"echoes", echoes},
          {"keywords_observed", keywords.size()},
          {"keywords", kws},
          {"errors", errors}};
}

std::string ReplaySummary::ToText() const {
  std::ostringstream out;
  char line[200];
  std::snprintf(line, sizeof(line),
                "segments %zu  finals %zu  words %zu  seconds %.1f\n"
                "rate %.1f/min (planned %.1f/min)  max lag %.2f ms  echoes "
                "%zu\n",
                segments_sent, finals, words, seconds, rate_per_min,
                planned_rate_per_min, max_lag_ms, echoes);
  out << line;
  out << "keywords observed " << keywords.size() << "\n";
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    out << "  " << keywords[i] << "\t" << keyword_categories[i] << "\n";
  }
  for (const auto &e : errors) out << "error " << e << "\n";
  return out.str();
}

}  // namespace convoref::app
