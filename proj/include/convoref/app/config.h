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

#ifndef CONVOREF_APP_CONFIG_H_
#define CONVOREF_APP_CONFIG_H_

#include <map>
#include <string>
#include <vector>

#include "convoref/hub/hub.h"
#include "convoref/hub/ws_server.h"
#include "convoref/ingest/session.h"
#include "json.hpp"
#include "convoref/nlp/types.h"
#include "convoref/refs/reference_engine.h"

namespace convoref::app {

// Where reference payloads come from.
struct ProviderSettings {
  // One JSON document per (phrase, kind): <fixture_dir>/<slug>.<kind>.
  std::string fixture_dir;
  // Coordinates table for map bundles.
  std::string geo_path;
  // Recorded Wikipedia summary responses; empty disables the adapter unless
  // `wiki_live` is set.
  std::string wiki_fixture_dir;
  // Query the live Wikipedia API (only in builds with live providers).
  bool wiki_live = false;
  int provider_timeout_ms = 2000;
  // Chain order per kind name, by provider id. Kinds not listed keep the
  // default order.
  std::map<std::string, std::vector<std::string>> chains;
};

// Everything `serve` needs, loaded from one flat JSON object.
struct ServerConfig {
  hub::ServerOptions server;
  hub::HubOptions hub;
  ingest::IngestOptions ingest;
  nlp::ExtractionParams params;
  refs::EngineOptions engine;
  ProviderSettings providers;
};

// Defaults with paths pointing into the bundled data directory.
ServerConfig DefaultConfig();

// Overlays the keys present in `j` onto `config`. Throws
// Error(kConfigInvalid) on unknown keys, wrong types or out-of-range values.
void ApplyConfig(const nlohmann::json &j, ServerConfig &config);

// DefaultConfig() overlaid with the JSON file at `path`. Throws
// Error(kIoError) if unreadable, Error(kConfigInvalid) if invalid.
ServerConfig LoadConfig(const std::string &path);

// Checks cross-field constraints. Throws Error(kConfigInvalid).
void Validate(const ServerConfig &config);

// The documented keys, for help output and tests.
const std::vector<std::string> &ConfigKeys();

}  // namespace convoref::app

#endif  // CONVOREF_APP_CONFIG_H_
