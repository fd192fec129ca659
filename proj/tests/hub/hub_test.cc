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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "convoref/common/error.h"
#include "doctest.h"
#include "support/mock_provider.h"
#include "support/mock_transport.h"

namespace convoref::hub {
namespace {

using ::testing::Hello;
using ::testing::MockProvider;
using ::testing::MockTransport;
using ::testing::Select;
using ::testing::Transcript;

ingest::IngestOptions DefaultIngest() {
  ingest::IngestOptions opts;
  opts.gazetteer_path = CONVOREF_DATA_DIR "/gazetteer.txt";
  return opts;
}

struct Fixture {
  explicit Fixture(HubOptions opts = {}) : sessions(DefaultIngest()) {
    for (refs::ReferenceKind k : refs::kAllKinds) {
      engine.RegisterProvider(k, provider, 0);
    }
    hub = std::make_unique<Hub>(sessions, engine, std::move(opts));
  }
  ~Fixture() {
    hub->Drain();
    engine.WaitIdle();
    hub.reset();
  }

  std::shared_ptr<MockTransport> Join(const std::string &session,
                                      const std::string &role = "viewer",
                                      bool stalled = false) {
    auto t = MockTransport::AttachTo(*hub, stalled);
    hub->OnFrame(t->conn(), Hello(session, role));
    return t;
  }

  void Say(const std::shared_ptr<MockTransport> &speaker,
           const std::string &text) {
    hub->OnFrame(speaker->conn(), Transcript(text));
  }

  void Settle() {
    hub->Drain();
    engine.WaitIdle();
  }

  ingest::SessionManager sessions;
  std::shared_ptr<MockProvider> provider = std::make_shared<MockProvider>("m");
  refs::ReferenceEngine engine;
  std::unique_ptr<Hub> hub;
};

std::vector<std::string> ErrorCodes(MockTransport &t) {
  std::vector<std::string> codes;
  for (auto &m : t.Of<ErrorMsg>()) codes.push_back(m.As<ErrorMsg>()->code);
  return codes;
}

std::string KeywordId(MockTransport &t, std::string_view phrase) {
  for (auto &m : t.Of<KeywordsUpdate>()) {
    for (const auto &k : m.As<KeywordsUpdate>()->keywords) {
      if (k.phrase == phrase) return k.id;
    }
  }
  return "";
}

TEST_CASE("Hello joins, is acknowledged first, and creates the session") {
  Fixture f;
  auto t = f.Join("room", "speaker");
  CHECK(f.hub->HasSession("room"));
  auto msgs = t->Messages();
  REQUIRE(msgs.size() == 1);
  CHECK(msgs[0].delivery_index == 0);
  REQUIRE(msgs[0].As<SessionHello>());
  CHECK(msgs[0].As<SessionHello>()->role == Role::kSpeaker);
  CHECK(msgs[0].session_id == "room");
  CHECK(f.hub->connection_count("room") == 1);
}

TEST_CASE("Unknown session is refused when creation on join is off") {
  HubOptions opts;
  opts.create_on_join = false;
  Fixture f(opts);
  auto t = f.Join("ghost");
  CHECK(ErrorCodes(*t) == std::vector<std::string>{"SESSION_NOT_FOUND"});
  CHECK_FALSE(f.hub->HasSession("ghost"));
  CHECK_FALSE(t->conn()->joined());
  f.hub->OpenSession({.session_id = "ghost"});
  f.hub->OnFrame(t->conn(), Hello("ghost"));
  CHECK(t->conn()->joined());
}

TEST_CASE("Two clients receive identical transcript and keyword updates") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  auto a = f.Join("room");
  auto b = f.Join("room");
  f.Say(speaker, "We flew from Paris to Berlin with Google engineers");
  f.Settle();
  auto ka = a->Of<KeywordsUpdate>();
  auto kb = b->Of<KeywordsUpdate>();
  REQUIRE(ka.size() == 1);
  REQUIRE(kb.size() == 1);
  CHECK(EncodeBody(ka[0]) == EncodeBody(kb[0]));
  CHECK(ka[0].delivery_index == kb[0].delivery_index);
  CHECK_FALSE(KeywordId(*a, "Paris").empty());
  CHECK(KeywordId(*a, "Paris").rfind("room:", 0) == 0);
  auto ta = a->Of<TranscriptUpdate>();
  REQUIRE(ta.size() == 1);
  CHECK(ta[0].As<TranscriptUpdate>()->seq == 0);
  CHECK(ta[0].As<TranscriptUpdate>()->is_final);
  // The transcript echo precedes its keywords.
  CHECK(ta[0].delivery_index < ka[0].delivery_index);
  // The speaker receives the broadcast too.
  CHECK(speaker->Of<KeywordsUpdate>().size() == 1);
}

TEST_CASE("Malformed frames get an error and the connection stays open") {
  Fixture f;
  auto t = f.Join("room", "speaker");
  f.hub->OnFrame(t->conn(), "{not json");
  f.hub->OnFrame(t->conn(), R"({"type":"teleport","session_id":"room"})");
  f.hub->OnFrame(t->conn(), R"({"type":"transcript_update"})");
  CHECK(ErrorCodes(*t) == std::vector<std::string>{
                              "BAD_MESSAGE", "UNKNOWN_MESSAGE_TYPE",
                              "BAD_MESSAGE"});
  CHECK_FALSE(t->conn()->closed());
  CHECK_FALSE(t->close_code());
  f.Say(t, "still talking");
  f.Settle();
  CHECK(t->Of<TranscriptUpdate>().size() == 1);
}

TEST_CASE("Messages before hello close the connection as a violation") {
  Fixture f;
  auto t = MockTransport::AttachTo(*f.hub);
  f.hub->OnFrame(t->conn(), Transcript("hello?"));
  CHECK(ErrorCodes(*t) == std::vector<std::string>{"HELLO_REQUIRED"});
  CHECK(t->close_code() == kCloseProtocolViolation);
  CHECK(t->conn()->closed());
}

TEST_CASE("Malformed frames before hello do not close") {
  Fixture f;
  auto t = MockTransport::AttachTo(*f.hub);
  f.hub->OnFrame(t->conn(), "garbage");
  CHECK(ErrorCodes(*t) == std::vector<std::string>{"BAD_MESSAGE"});
  CHECK_FALSE(t->close_code());
}

TEST_CASE("Connections without hello time out") {
  HubOptions opts;
  opts.handshake_timeout_ms = 5000;
  Fixture f(opts);
  auto idle = MockTransport::AttachTo(*f.hub, false, 1000);
  auto joined = MockTransport::AttachTo(*f.hub, false, 1000);
  f.hub->OnFrame(joined->conn(), Hello("room"));
  f.hub->Tick(5999);
  CHECK_FALSE(idle->close_code());
  f.hub->Tick(6000);
  CHECK(idle->close_code() == kCloseHandshakeTimeout);
  CHECK_FALSE(joined->close_code());
}

TEST_CASE("Heartbeat pings and drops after two missed pongs") {
  HubOptions opts;
  opts.heartbeat_interval_ms = 15000;
  opts.max_missed_pongs = 2;
  Fixture f(opts);
  auto live = MockTransport::AttachTo(*f.hub, false, 1);
  auto dead = MockTransport::AttachTo(*f.hub, false, 1);
  f.hub->OnFrame(live->conn(), Hello("room"));
  f.hub->OnFrame(dead->conn(), Hello("room"));

  auto answer = [&](MockTransport &t) {
    auto pings = t.Of<Ping>();
    REQUIRE_FALSE(pings.empty());
    nlohmann::json pong = {{"type", "pong"},
                           {"nonce", pings.back().As<Ping>()->nonce},
                           {"sent_at_ms", 0}};
    f.hub->OnFrame(t.conn(), pong.dump());
  };

  f.hub->Tick(10000);
  CHECK(live->Of<Ping>().empty());
  for (double now : {15001.0, 30001.0, 45001.0, 60001.0}) {
    f.hub->Tick(now);
    if (!live->close_code()) answer(*live);
  }
  CHECK(dead->Of<Ping>().size() == 2);
  CHECK(dead->close_code() == kCloseGoingAway);
  CHECK_FALSE(live->close_code());
  CHECK(live->Of<Ping>().size() == 4);
}

TEST_CASE("Client pings are answered with the same nonce") {
  Fixture f;
  auto t = f.Join("room");
  f.hub->OnFrame(t->conn(),
                 R"({"type":"ping","nonce":"abc","sent_at_ms":7})");
  auto pongs = t->Of<Pong>();
  REQUIRE(pongs.size() == 1);
  CHECK(pongs[0].As<Pong>()->nonce == "abc");
  CHECK(pongs[0].As<Pong>()->sent_at_ms == 7);
}

TEST_CASE("Broadcast without clients reaches nobody") {
  Fixture f;
  f.hub->OpenSession({.session_id = "empty"});
  WireMessage m{"empty", -1, TranscriptUpdate{0, "x", true}};
  CHECK(f.hub->Broadcast("empty", m) == 0);
  CHECK(f.hub->Broadcast("missing", m) == 0);
}

TEST_CASE("A hundred updates arrive in order at every client") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  std::vector<std::shared_ptr<MockTransport>> viewers;
  for (int i = 0; i < 3; ++i) viewers.push_back(f.Join("room"));
  for (int i = 0; i < 100; ++i) {
    f.Say(speaker, "update number " + std::to_string(i));
  }
  f.Settle();
  std::vector<std::string> reference;
  for (auto &v : viewers) {
    auto msgs = v->Messages();
    for (std::size_t i = 0; i < msgs.size(); ++i) {
      CHECK(msgs[i].delivery_index == static_cast<int64_t>(i));
    }
    std::vector<std::string> bodies;
    int64_t expect = 0;
    for (auto &m : v->Of<TranscriptUpdate>()) {
      CHECK(m.As<TranscriptUpdate>()->seq == expect);
      CHECK(m.As<TranscriptUpdate>()->text ==
            "update number " + std::to_string(expect));
      ++expect;
      bodies.push_back(EncodeBody(m));
    }
    CHECK(expect == 100);
    if (reference.empty()) {
      reference = bodies;
    } else {
      CHECK(bodies == reference);
    }
  }
}

TEST_CASE("A stalled client is dropped without affecting the others") {
  HubOptions opts;
  opts.buffer_bound = 8;
  Fixture f(opts);
  auto speaker = f.Join("room", "speaker");
  auto fast = f.Join("room");
  auto slow = f.Join("room", "viewer", /*stalled=*/true);
  for (int i = 0; i < 20; ++i) f.Say(speaker, "line " + std::to_string(i));
  f.Settle();
  CHECK(slow->close_code() == kCloseSlowConsumer);
  CHECK(slow->conn()->queued() == 0);
  CHECK(slow->conn()->max_queued() <= 8);
  CHECK(fast->Of<TranscriptUpdate>().size() == 20);
  CHECK_FALSE(fast->close_code());
  CHECK(f.hub->connection_count("room") == 2);
}

TEST_CASE("Selecting a prefetched keyword is served from the cache") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  auto viewer = f.Join("room");
  f.Say(speaker, "I spent a week in Paris");
  f.Settle();
  std::string id = KeywordId(*viewer, "Paris");
  REQUIRE_FALSE(id.empty());
  int calls = f.provider->calls;
  f.hub->OnFrame(viewer->conn(), Select(id));
  f.Settle();
  CHECK(f.provider->calls == calls);
  for (auto *t : {speaker.get(), viewer.get()}) {
    auto ready = t->Of<ReferenceReady>();
    REQUIRE(ready.size() == 1);
    const auto *r = ready[0].As<ReferenceReady>();
    CHECK(r->keyword_id == id);
    CHECK(r->kind == refs::ReferenceKind::kImageSet);
    CHECK(r->bundle.ok());
    CHECK(r->bundle.keyword_id == id);
  }
  CHECK(f.hub->SelectLatency().count == 1);
}

TEST_CASE("Selecting a non-prefetched kind resolves it on demand") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  f.Say(speaker, "I spent a week in Paris");
  f.Settle();
  std::string id = KeywordId(*speaker, "Paris");
  f.hub->OnFrame(speaker->conn(), Select(id, "map"));
  f.Settle();
  auto ready = speaker->Of<ReferenceReady>();
  REQUIRE(ready.size() == 1);
  CHECK(ready[0].As<ReferenceReady>()->kind == refs::ReferenceKind::kMap);
  CHECK(ready[0].As<ReferenceReady>()->bundle.payload["lat"] == 1.5);
}

TEST_CASE("Private selection answers only the requester") {
  HubOptions opts;
  opts.private_selection = true;
  Fixture f(opts);
  auto speaker = f.Join("room", "speaker");
  auto other = f.Join("room");
  f.Say(speaker, "I spent a week in Paris");
  f.Settle();
  f.hub->OnFrame(speaker->conn(), Select(KeywordId(*speaker, "Paris")));
  f.Settle();
  CHECK(speaker->Of<ReferenceReady>().size() == 1);
  CHECK(other->Of<ReferenceReady>().empty());
}

TEST_CASE("Unknown or foreign keyword ids are reported to the requester") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  auto viewer = f.Join("room");
  auto stranger = f.Join("other", "speaker");
  f.Say(speaker, "I spent a week in Paris");
  f.Settle();
  std::string id = KeywordId(*speaker, "Paris");
  f.hub->OnFrame(viewer->conn(), Select("room:999"));
  f.hub->OnFrame(stranger->conn(), Select(id));
  f.Settle();
  CHECK(ErrorCodes(*viewer) == std::vector<std::string>{"KEYWORD_NOT_FOUND"});
  CHECK(ErrorCodes(*stranger) ==
        std::vector<std::string>{"KEYWORD_NOT_FOUND"});
  CHECK(ErrorCodes(*speaker).empty());
  CHECK(speaker->Of<ReferenceReady>().empty());
}

TEST_CASE("Provider outage surfaces as an error to the requester") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  auto viewer = f.Join("room");
  f.Say(speaker, "I spent a week in Paris");
  f.Settle();
  f.provider->fail = true;
  f.hub->OnFrame(viewer->conn(), Select(KeywordId(*speaker, "Paris"), "map"));
  f.Settle();
  CHECK(ErrorCodes(*viewer) ==
        std::vector<std::string>{"PROVIDERS_UNAVAILABLE"});
  CHECK(ErrorCodes(*speaker).empty());
  CHECK_FALSE(viewer->close_code());
}

TEST_CASE("Only speakers may send transcripts, and never empty ones") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  auto viewer = f.Join("room");
  f.Say(viewer, "let me talk");
  f.Say(speaker, "   ");
  f.Settle();
  CHECK(ErrorCodes(*viewer) == std::vector<std::string>{"FORBIDDEN"});
  CHECK(ErrorCodes(*speaker) == std::vector<std::string>{"EMPTY_SEGMENT"});
  CHECK(viewer->Of<TranscriptUpdate>().empty());
  CHECK(f.sessions.Snapshot("room").next_seq == 0);
}

TEST_CASE("Messages for another session are refused") {
  Fixture f;
  auto t = f.Join("room", "speaker");
  f.hub->OnFrame(
      t->conn(),
      R"({"type":"transcript_update","session_id":"elsewhere","text":"x","is_final":true})");
  f.hub->OnFrame(t->conn(), Hello("room"));
  CHECK(ErrorCodes(*t) ==
        std::vector<std::string>{"FORBIDDEN", "BAD_MESSAGE"});
}

TEST_CASE("Pipeline latency is traced per segment") {
  Fixture f;
  auto speaker = f.Join("room", "speaker");
  for (int i = 0; i < 50; ++i) f.Say(speaker, "We drove to Seattle again");
  f.Settle();
  LatencyStats s = f.hub->MeasurePipelineLatency("room");
  CHECK(s.count == 50);
  CHECK(s.p50 >= 0);
  CHECK(s.p95 >= s.p50);
  CHECK(s.max >= s.p95);
  CHECK(f.hub->pipeline_stats("room").processed == 50);
  CHECK(f.hub->pipeline_stats("room").queued == 0);
  CHECK(f.hub->pipeline_stats("room").max_queued >= 1);
  auto traces = f.hub->Traces("room");
  REQUIRE(traces.size() == 50);
  for (const auto &t : traces) {
    CHECK(t.t_ingest <= t.t_extract_done);
    CHECK(t.t_extract_done <= t.t_broadcast_enqueued);
  }
  f.hub->OnFrame(speaker->conn(),
                 R"({"type":"pong","nonce":"seq:3","sent_at_ms":0})", 12345);
  CHECK(f.hub->Traces("room")[3].t_client_echo == 12345);
  CHECK(std::isnan(f.hub->Traces("room")[4].t_client_echo));
}

TEST_CASE("Closing a session disconnects its clients") {
  Fixture f;
  auto t = f.Join("room");
  f.hub->CloseSession("room");
  CHECK(t->close_code() == kCloseGoingAway);
  CHECK_FALSE(f.hub->HasSession("room"));
  CHECK_THROWS_AS(f.hub->CloseSession("room"), Error);
}

TEST_CASE("Broadcasts are appended to the session log") {
  auto path = std::filesystem::temp_directory_path() / "convoref_hub_log.jsonl";
  std::filesystem::remove(path);
  HubOptions opts;
  opts.session_log = path.string();
  {
    Fixture f(opts);
    auto speaker = f.Join("room", "speaker");
    f.Say(speaker, "first line");
    f.Say(speaker, "second line");
    f.Settle();
  }
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    auto m = Decode(line);
    CHECK(m.delivery_index == -1);
    CHECK(m.As<TranscriptUpdate>());
    ++n;
  }
  CHECK(n == 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace convoref::hub
