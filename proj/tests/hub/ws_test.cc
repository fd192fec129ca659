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

#include <chrono>
#include <condition_variable>
#include <mutex>

#include "convoref/common/error.h"
#include "convoref/hub/hub.h"
#include "convoref/hub/ws_client.h"
#include "convoref/hub/ws_server.h"
#include "doctest.h"
#include "httplib.h"
#include "support/mock_provider.h"
#include "support/mock_transport.h"

namespace convoref::hub {
namespace {

using namespace std::chrono_literals;

// Collects a client's frames and close event for assertions.
class Inbox {
 public:
  explicit Inbox(WsClient &client) {
    client.OnFrame([this](const std::string &f) {
      std::lock_guard<std::mutex> lock(mu_);
      frames_.push_back(Decode(f));
      cv_.notify_all();
    });
    client.OnClose([this](int code, const std::string &) {
      std::lock_guard<std::mutex> lock(mu_);
      close_code_ = code;
      cv_.notify_all();
    });
  }

  template <typename T>
  bool WaitFor(std::size_t n, std::chrono::milliseconds timeout = 5s) {
    std::unique_lock<std::mutex> lock(mu_);
    return cv_.wait_for(lock, timeout, [&] { return CountLocked<T>() >= n; });
  }

  bool WaitClosed(std::chrono::milliseconds timeout = 5s) {
    std::unique_lock<std::mutex> lock(mu_);
    return cv_.wait_for(lock, timeout, [&] { return close_code_.has_value(); });
  }

  template <typename T>
  std::vector<WireMessage> Of() {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<WireMessage> out;
    for (const auto &m : frames_) {
      if (m.As<T>()) out.push_back(m);
    }
    return out;
  }

  std::vector<WireMessage> All() {
    std::lock_guard<std::mutex> lock(mu_);
    return frames_;
  }

  std::optional<int> close_code() {
    std::lock_guard<std::mutex> lock(mu_);
    return close_code_;
  }

 private:
  template <typename T>
  std::size_t CountLocked() const {
    std::size_t n = 0;
    for (const auto &m : frames_) n += m.As<T>() != nullptr;
    return n;
  }

  std::mutex mu_;
  std::condition_variable cv_;
  std::vector<WireMessage> frames_;
  std::optional<int> close_code_;
};

struct Loopback {
  explicit Loopback(HubOptions hub_opts = {}) : sessions([] {
    ingest::IngestOptions o;
    o.gazetteer_path = CONVOREF_DATA_DIR "/gazetteer.txt";
    return o;
  }()) {
    for (refs::ReferenceKind k : refs::kAllKinds) {
      engine.RegisterProvider(k, std::make_shared<::testing::MockProvider>("m"),
                              0);
    }
    hub = std::make_unique<Hub>(sessions, engine, hub_opts);
    ServerOptions opts;
    opts.bind = "127.0.0.1:0";
    opts.tick_interval_ms = 20;
    server = std::make_unique<WsServer>(*hub, opts);
    server->Start();
  }
  ~Loopback() {
    server->Stop();
    hub->Drain();
    engine.WaitIdle();
  }

  ingest::SessionManager sessions;
  refs::ReferenceEngine engine;
  std::unique_ptr<Hub> hub;
  std::unique_ptr<WsServer> server;
};

TEST_CASE("Bind addresses are validated") {
  auto [host, port] = ParseBindAddress("0.0.0.0:8765");
  CHECK(host == "0.0.0.0");
  CHECK(port == 8765);
  CHECK_THROWS_AS(ParseBindAddress("localhost"), Error);
  CHECK_THROWS_AS(ParseBindAddress("host:99999"), Error);
  CHECK_THROWS_AS(ParseBindAddress("host:abc"), Error);
}

TEST_CASE("WebSocket URLs are parsed") {
  WsUrl u = ParseWsUrl("ws://127.0.0.1:9000/ws");
  CHECK(u.host == "127.0.0.1");
  CHECK(u.port == "9000");
  CHECK(u.target == "/ws");
  CHECK_THROWS_AS(ParseWsUrl("http://x/ws"), Error);
}

TEST_CASE("Speaker and viewers share a session over real sockets") {
  Loopback lb;
  WsClient speaker, viewer;
  Inbox sin(speaker), vin(viewer);
  speaker.Connect(lb.server->url());
  viewer.Connect(lb.server->url());
  speaker.Send(::testing::Hello("live", "speaker"));
  viewer.Send(::testing::Hello("live"));
  REQUIRE(sin.WaitFor<SessionHello>(1));
  REQUIRE(vin.WaitFor<SessionHello>(1));

  speaker.Send(::testing::Transcript("Tomorrow we meet Sarah in Tokyo"));
  REQUIRE(vin.WaitFor<KeywordsUpdate>(1));
  auto kws = vin.Of<KeywordsUpdate>()[0].As<KeywordsUpdate>()->keywords;
  std::string tokyo;
  for (const auto &k : kws) {
    if (k.phrase == "Tokyo") tokyo = k.id;
  }
  REQUIRE_FALSE(tokyo.empty());
  lb.engine.WaitIdle();

  viewer.Send(::testing::Select(tokyo));
  REQUIRE(vin.WaitFor<ReferenceReady>(1));
  REQUIRE(sin.WaitFor<ReferenceReady>(1));
  CHECK(vin.Of<ReferenceReady>()[0].As<ReferenceReady>()->keyword_id == tokyo);

  auto all = vin.All();
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].delivery_index == static_cast<int64_t>(i));
    CHECK(all[i].session_id == "live");
  }
  speaker.Close();
  viewer.Close();
}

TEST_CASE("Protocol violations close with the documented code") {
  Loopback lb;
  WsClient c;
  Inbox in(c);
  c.Connect(lb.server->url());
  c.Send(::testing::Transcript("no hello"));
  REQUIRE(in.WaitClosed());
  CHECK(in.close_code() == kCloseProtocolViolation);
  REQUIRE(in.Of<ErrorMsg>().size() == 1);
  CHECK(in.Of<ErrorMsg>()[0].As<ErrorMsg>()->code == "HELLO_REQUIRED");
}

TEST_CASE("Silent connections hit the handshake timeout") {
  HubOptions opts;
  opts.handshake_timeout_ms = 100;
  Loopback lb(opts);
  WsClient c;
  Inbox in(c);
  c.Connect(lb.server->url());
  REQUIRE(in.WaitClosed(3s));
  CHECK(in.close_code() == kCloseHandshakeTimeout);
}

TEST_CASE("A client that stops reading is dropped as a slow consumer") {
  HubOptions opts;
  opts.buffer_bound = 16;
  Loopback lb(opts);
  WsClient speaker, fast, slow;
  Inbox sin(speaker), fin(fast), lin(slow);
  for (WsClient *c : {&speaker, &fast, &slow}) c->Connect(lb.server->url());
  speaker.Send(::testing::Hello("room", "speaker"));
  fast.Send(::testing::Hello("room"));
  slow.Send(::testing::Hello("room"));
  REQUIRE(lin.WaitFor<SessionHello>(1));
  REQUIRE(fin.WaitFor<SessionHello>(1));
  slow.PauseReading();
  // Large frames fill the socket buffers quickly. The speaker sends in
  // batches paced by the fast viewer, so only the stalled reader backs up.
  const std::string filler(60000, 'a');
  const int kBatches = 40;
  const int kBatch = 6;
  for (int b = 0; b < kBatches; ++b) {
    for (int i = 0; i < kBatch; ++i) {
      speaker.Send(::testing::Transcript(filler + " " + std::to_string(b)));
    }
    REQUIRE(fin.WaitFor<TranscriptUpdate>((b + 1) * kBatch, 10s));
  }
  lb.hub->Drain();
  CHECK(lb.hub->connection_count("room") == 2);
  auto seqs = fin.Of<TranscriptUpdate>();
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    CHECK(seqs[i].As<TranscriptUpdate>()->seq == static_cast<int64_t>(i));
  }
}

TEST_CASE("Health and non-upgrade requests are answered over HTTP") {
  Loopback lb;
  httplib::Client http("127.0.0.1", lb.server->port());
  auto health = http.Get("/healthz");
  REQUIRE(health);
  CHECK(health->status == 200);
  auto plain = http.Get("/ws");
  REQUIRE(plain);
  CHECK(plain->status == 426);
  auto missing = http.Get("/nowhere");
  REQUIRE(missing);
  CHECK(missing->status == 404);
}

TEST_CASE("Connecting to a closed port fails with an I/O error") {
  std::string url;
  {
    Loopback lb;
    url = lb.server->url();
  }
  WsClient c;
  try {
    c.Connect(url, 1s);
    FAIL("connect should fail");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace convoref::hub
