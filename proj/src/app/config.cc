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

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "convoref/common/error.h"
#include "convoref/refs/reference.h"

namespace convoref::app {
namespace {

using nlohmann::json;

[[noreturn]] void Invalid(const std::string &key, const std::string &why) {
  throw Error(ErrorCode::kConfigInvalid, "config key '" + key + "': " + why);
}

template <typename T>
T Get(const json &v, const std::string &key);

template <>
std::string Get<std::string>(const json &v, const std::string &key) {
  if (!v.is_string()) Invalid(key, "expected a string");
  return v.get<std::string>();
}

template <>
bool Get<bool>(const json &v, const std::string &key) {
  if (!v.is_boolean()) Invalid(key, "expected true or false");
  return v.get<bool>();
}

template <>
double Get<double>(const json &v, const std::string &key) {
  if (!v.is_number()) Invalid(key, "expected a number");
  return v.get<double>();
}

// Non-negative integer.
template <>
int64_t Get<int64_t>(const json &v, const std::string &key) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    Invalid(key, "expected an integer");
  }
  int64_t n = v.get<int64_t>();
  if (n < 0) Invalid(key, "must not be negative");
  return n;
}

using Setter = std::function<void(const json &, const std::string &,
                                  ServerConfig &)>;

const std::vector<std::pair<std::string, Setter>> &Setters() {
  static const auto *setters = new std::vector<std::pair<std::string, Setter>>{
      // Realtime hub.
      {"bind",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.server.bind = Get<std::string>(v, k);
         hub::ParseBindAddress(c.server.bind);
       }},
      {"buffer_bound",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.buffer_bound = Get<int64_t>(v, k);
       }},
      {"handshake_timeout_ms",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.handshake_timeout_ms = Get<double>(v, k);
       }},
      {"heartbeat_interval_ms",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.heartbeat_interval_ms = Get<double>(v, k);
       }},
      {"max_missed_pongs",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.max_missed_pongs = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"create_on_join",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.create_on_join = Get<bool>(v, k);
       }},
      {"private_selection",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.private_selection = Get<bool>(v, k);
       }},
      {"io_threads",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.server.io_threads = Get<int64_t>(v, k);
       }},
      {"session_log",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.hub.session_log = Get<std::string>(v, k);
       }},
      // Transcript ingest.
      {"idle_timeout_ms",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.ingest.idle_timeout_ms = Get<double>(v, k);
       }},
      // Extraction.
      {"damping",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.params.damping = Get<double>(v, k);
       }},
      {"window",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.params.window = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"epsilon",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.params.epsilon = Get<double>(v, k);
       }},
      {"max_iter",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.params.max_iter = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"stopword_path",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.params.stopword_path = Get<std::string>(v, k);
       }},
      {"gazetteer_path",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.params.gazetteer_path = Get<std::string>(v, k);
       }},
      // References.
      {"fixture_dir",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.providers.fixture_dir = Get<std::string>(v, k);
       }},
      {"geo_path",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.providers.geo_path = Get<std::string>(v, k);
       }},
      {"wiki_fixture_dir",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.providers.wiki_fixture_dir = Get<std::string>(v, k);
       }},
      {"wiki_live",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.providers.wiki_live = Get<bool>(v, k);
       }},
      {"provider_timeout_ms",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.providers.provider_timeout_ms = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"chains",
       [](const json &v, const std::string &k, ServerConfig &c) {
         if (!v.is_object()) Invalid(k, "expected an object of kind -> ids");
         for (const auto &[kind, ids] : v.items()) {
           if (!refs::ParseKind(kind)) Invalid(k, "unknown kind " + kind);
           if (!ids.is_array() || ids.empty()) {
             Invalid(k, kind + ": expected a non-empty list of provider ids");
           }
           std::vector<std::string> order;
           for (const auto &id : ids) order.push_back(Get<std::string>(id, k));
           c.providers.chains[kind] = std::move(order);
         }
       }},
      {"cache_capacity",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.engine.cache_capacity = Get<int64_t>(v, k);
       }},
      {"ttl_s",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.engine.ttl_s = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"weather_ttl_s",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.engine.weather_ttl_s = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"unavailable_ttl_s",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.engine.unavailable_ttl_s = static_cast<int>(Get<int64_t>(v, k));
       }},
      {"chain_budget_ms",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.engine.chain_budget = std::chrono::milliseconds(Get<int64_t>(v, k));
       }},
      {"prefetch_parallelism",
       [](const json &v, const std::string &k, ServerConfig &c) {
         c.engine.prefetch_parallelism = Get<int64_t>(v, k);
       }},
  };
  return *setters;
}

}  // namespace

ServerConfig DefaultConfig() {
  ServerConfig c;
  const std::string data = CONVOREF_DATA_DIR;
  c.params.gazetteer_path = data + "/gazetteer.txt";
  c.ingest.gazetteer_path = c.params.gazetteer_path;
  c.providers.fixture_dir = data + "/fixtures/references";
  c.providers.geo_path = data + "/geo.tsv";
  return c;
}

const std::vector<std::string> &ConfigKeys() {
  static const auto *keys = [] {
    auto *k = new std::vector<std::string>;
    for (const auto &[name, _] : Setters()) k->push_back(name);
    return k;
  }();
  return *keys;
}

void ApplyConfig(const json &j, ServerConfig &config) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kConfigInvalid, "config must be a JSON object");
  }
  for (const auto &[key, value] : j.items()) {
    const auto &setters = Setters();
    auto it = std::find_if(setters.begin(), setters.end(),
                           [&](const auto &s) { return s.first == key; });
    if (it == setters.end()) Invalid(key, "unknown key");
    it->second(value, key, config);
  }
  config.ingest.gazetteer_path = config.params.gazetteer_path;
  Validate(config);
}

ServerConfig LoadConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, /*allow_exceptions=*/false,
                       /*ignore_comments=*/true);
  if (j.is_discarded()) {
    throw Error(ErrorCode::kConfigInvalid, path + " is not valid JSON");
  }
  ServerConfig config = DefaultConfig();
  ApplyConfig(j, config);
  return config;
}

void Validate(const ServerConfig &c) {
  auto check = [](bool ok, const std::string &key, const std::string &why) {
    if (!ok) Invalid(key, why);
  };
  c.params.Validate();
  hub::ParseBindAddress(c.server.bind);
  check(c.hub.buffer_bound > 0, "buffer_bound", "must be positive");
  check(c.hub.handshake_timeout_ms > 0, "handshake_timeout_ms",
        "must be positive");
  check(c.hub.heartbeat_interval_ms >= 0, "heartbeat_interval_ms",
        "must not be negative");
  check(c.hub.max_missed_pongs > 0, "max_missed_pongs", "must be positive");
  check(c.server.io_threads > 0, "io_threads", "must be positive");
  check(c.ingest.idle_timeout_ms > 0, "idle_timeout_ms", "must be positive");
  check(c.engine.cache_capacity > 0, "cache_capacity", "must be positive");
  check(c.engine.prefetch_parallelism > 0, "prefetch_parallelism",
        "must be positive");
  check(c.engine.chain_budget.count() > 0, "chain_budget_ms",
        "must be positive");
  check(c.providers.provider_timeout_ms > 0, "provider_timeout_ms",
        "must be positive");
}

}  // namespace convoref::app
