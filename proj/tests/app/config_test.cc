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

#include "convoref/app/config.h"

#include <filesystem>
#include <fstream>

#include "convoref/app/runtime.h"
#include "convoref/common/error.h"
#include "doctest.h"

namespace convoref::app {
namespace {

using nlohmann::json;

void ExpectInvalid(const json &j) {
  CAPTURE(j.dump());
  ServerConfig c = DefaultConfig();
  try {
    ApplyConfig(j, c);
    FAIL("expected CONFIG_INVALID");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kConfigInvalid);
  }
}

std::string WriteTemp(const std::string &name, const std::string &body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST_CASE("Defaults are valid and point at bundled data") {
  ServerConfig c = DefaultConfig();
  CHECK_NOTHROW(Validate(c));
  CHECK(std::filesystem::exists(c.params.gazetteer_path));
  CHECK(std::filesystem::exists(c.providers.geo_path));
  CHECK(std::filesystem::is_directory(c.providers.fixture_dir));
  CHECK(c.server.bind == "127.0.0.1:8765");
  CHECK(c.hub.buffer_bound == 256);
  CHECK(c.hub.handshake_timeout_ms == 5000);
  CHECK(c.hub.create_on_join);
  CHECK_FALSE(c.hub.private_selection);
  CHECK(c.params.damping == 0.85);
  CHECK(c.params.window == 4);
  CHECK(c.params.epsilon == 1e-4);
  CHECK(c.params.max_iter == 50);
  CHECK(c.ingest.idle_timeout_ms == 5000);
}

TEST_CASE("Documented keys overlay the defaults") {
  ServerConfig c = DefaultConfig();
  ApplyConfig(json::parse(R"({
    "bind": "0.0.0.0:9000", "buffer_bound": 32, "handshake_timeout_ms": 250,
    "create_on_join": false, "private_selection": true,
    "damping": 0.5, "window": 3, "epsilon": 1e-6, "max_iter": 80,
    "idle_timeout_ms": 1500, "cache_capacity": 16, "ttl_s": 60,
    "chain_budget_ms": 900, "provider_timeout_ms": 300,
    "chains": {"map": ["geo"]}
  })"),
              c);
  CHECK(c.server.bind == "0.0.0.0:9000");
  CHECK(c.hub.buffer_bound == 32);
  CHECK(c.hub.handshake_timeout_ms == 250);
  CHECK_FALSE(c.hub.create_on_join);
  CHECK(c.hub.private_selection);
  CHECK(c.params.damping == 0.5);
  CHECK(c.params.window == 3);
  CHECK(c.params.epsilon == 1e-6);
  CHECK(c.params.max_iter == 80);
  CHECK(c.ingest.idle_timeout_ms == 1500);
  CHECK(c.engine.cache_capacity == 16);
  CHECK(c.engine.ttl_s == 60);
  CHECK(c.engine.chain_budget.count() == 900);
  CHECK(c.providers.provider_timeout_ms == 300);
  CHECK(c.providers.chains.at("map") == std::vector<std::string>{"geo"});
  // Untouched keys keep their defaults.
  CHECK(c.hub.heartbeat_interval_ms == 15000);
}

TEST_CASE("Unknown keys, wrong types and bad values are rejected") {
  ExpectInvalid(json::parse(R"({"bind_address": "x"})"));
  ExpectInvalid(json::parse(R"({"buffer_bound": "big"})"));
  ExpectInvalid(json::parse(R"({"buffer_bound": 0})"));
  ExpectInvalid(json::parse(R"({"buffer_bound": -4})"));
  ExpectInvalid(json::parse(R"({"damping": 1.5})"));
  ExpectInvalid(json::parse(R"({"window": 1})"));
  ExpectInvalid(json::parse(R"({"bind": "nowhere"})"));
  ExpectInvalid(json::parse(R"({"create_on_join": 1})"));
  ExpectInvalid(json::parse(R"({"chains": {"movie": ["fixtures"]}})"));
  ExpectInvalid(json::parse(R"({"chains": {"map": []}})"));
  ExpectInvalid(json::parse("[1, 2]"));
}

TEST_CASE("Config files load, and failures are typed") {
  std::string good =
      WriteTemp("convoref_good.json", R"({"bind": "127.0.0.1:0"})");
  CHECK(LoadConfig(good).server.bind == "127.0.0.1:0");
  std::string bad = WriteTemp("convoref_bad.json", "{ not json");
  CHECK_THROWS_WITH_AS(LoadConfig(bad), doctest::Contains("not valid JSON"),
                       Error);
  try {
    LoadConfig("/nonexistent/convoref.json");
    FAIL("expected IO_ERROR");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("Every documented key is accepted") {
  const auto &keys = ConfigKeys();
  for (const char *k :
       {"bind", "buffer_bound", "handshake_timeout_ms", "damping", "window",
        "epsilon", "max_iter", "stopword_path", "gazetteer_path",
        "fixture_dir", "chains", "cache_capacity", "ttl_s",
        "provider_timeout_ms"}) {
    CAPTURE(k);
    CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
  }
}

TEST_CASE("Default provider chains cover every kind") {
  refs::ReferenceEngine engine;
  RegisterProviders(engine, DefaultConfig().providers);
  for (refs::ReferenceKind k : refs::kAllKinds) {
    CAPTURE(refs::KindName(k));
    auto chain = engine.Chain(k);
    REQUIRE_FALSE(chain.empty());
    CHECK(chain.front() == kFixtureProviderId);
  }
  CHECK(engine.Chain(refs::ReferenceKind::kMap) ==
        std::vector<std::string>{"fixtures", "geo"});
  CHECK(engine.Chain(refs::ReferenceKind::kCalendar) ==
        std::vector<std::string>{"fixtures", "calendar"});
  CHECK(engine.Chain(refs::ReferenceKind::kImageSet) ==
        std::vector<std::string>{"fixtures", "synthetic"});
  // Without recorded or live Wikipedia only curated fixtures answer.
  CHECK(engine.Chain(refs::ReferenceKind::kWikiSnippet) ==
        std::vector<std::string>{"fixtures"});
}

TEST_CASE("Chains can be reordered and wiki fixtures enabled") {
  ProviderSettings s = DefaultConfig().providers;
  s.wiki_fixture_dir = CONVOREF_TEST_FIXTURES "/wiki";
  s.chains["image_set"] = {"synthetic"};
  refs::ReferenceEngine engine;
  RegisterProviders(engine, s);
  CHECK(engine.Chain(refs::ReferenceKind::kImageSet) ==
        std::vector<std::string>{"synthetic"});
  CHECK(engine.Chain(refs::ReferenceKind::kWikiSnippet) ==
        std::vector<std::string>{"fixtures", "wikipedia"});

  nlp::Keyword k;
  k.id = "s:0";
  k.phrase = "Pablo Picasso";
  k.normalized = "pablo picasso";
  k.category = nlp::EntityCategory::kPerson;
  engine.RegisterKeyword(k);
  // The curated fixture wins over the recorded response.
  auto bundle = engine.Resolve("s:0", refs::ReferenceKind::kWikiSnippet);
  CHECK(bundle.provider_id == "fixtures");
  CHECK_FALSE(bundle.payload["extract"].get<std::string>().empty());

  s.chains["map"] = {"teleporter"};
  refs::ReferenceEngine other;
  CHECK_THROWS_AS(RegisterProviders(other, s), Error);
}

TEST_CASE("Runtime serves on an ephemeral port") {
  ServerConfig c = DefaultConfig();
  c.server.bind = "127.0.0.1:0";
  Runtime rt(c);
  rt.Start();
  CHECK(rt.port() != 0);
  CHECK(rt.url() == "ws://127.0.0.1:" + std::to_string(rt.port()) + "/ws");
  rt.hub().EnsureSession("x");
  CHECK(rt.hub().HasSession("x"));
  rt.Stop();
}

}  // namespace
}  // namespace convoref::app
