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

#ifndef CONVOREF_APP_RUNTIME_H_
#define CONVOREF_APP_RUNTIME_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "convoref/app/config.h"
#include "convoref/hub/hub.h"
#include "convoref/hub/ws_server.h"
#include "convoref/ingest/session.h"
#include "convoref/refs/reference_engine.h"

namespace convoref::app {

// Provider ids usable in the `chains` config key.
inline constexpr const char *kFixtureProviderId = "fixtures";
inline constexpr const char *kSyntheticProviderId = "synthetic";
inline constexpr const char *kGeoProviderId = "geo";
inline constexpr const char *kCalendarProviderId = "calendar";
inline constexpr const char *kWikipediaProviderId = "wikipedia";

// Default chain order per kind name, by provider id.
std::map<std::string, std::vector<std::string>> DefaultChains(
    const ProviderSettings &settings);

// Builds the configured providers and registers them on `engine` in chain
// order. Throws Error(kConfigInvalid) when a chain names an unknown or
// unavailable provider, Error(kIoError) when a data file is unreadable.
void RegisterProviders(refs::ReferenceEngine &engine,
                       const ProviderSettings &settings);

// The assembled server: sessions, reference engine, hub and WebSocket
// endpoint.
class Runtime {
 public:
  explicit Runtime(ServerConfig config);
  ~Runtime();

  Runtime(const Runtime &) = delete;
  Runtime &operator=(const Runtime &) = delete;

  // Starts listening. Throws Error(kIoError) if the address is taken.
  void Start();
  // Stops the endpoint and waits for in-flight work.
  void Stop();

  uint16_t port() const;
  std::string url() const;

  ingest::SessionManager &sessions() { return sessions_; }
  refs::ReferenceEngine &engine() { return engine_; }
  hub::Hub &hub() { return *hub_; }
  const ServerConfig &config() const { return config_; }

 private:
  ServerConfig config_;
  ingest::SessionManager sessions_;
  refs::ReferenceEngine engine_;
  std::unique_ptr<hub::Hub> hub_;
  std::unique_ptr<hub::WsServer> server_;
  bool started_ = false;
};

}  // namespace convoref::app

#endif  // CONVOREF_APP_RUNTIME_H_
