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

#include "convoref/app/runtime.h"

#include <chrono>

#include "convoref/common/error.h"
#include "convoref/refs/calendar.h"
#include "convoref/refs/providers.h"
#include "convoref/refs/reference.h"
#include "convoref/refs/wikipedia.h"

namespace convoref::app {
namespace {

hub::HubOptions HubOptionsFor(const ServerConfig &config) {
  hub::HubOptions opts = config.hub;
  opts.default_session.params = config.params;
  return opts;
}

}  // namespace

std::map<std::string, std::vector<std::string>> DefaultChains(
    const ProviderSettings &settings) {
  std::map<std::string, std::vector<std::string>> chains;
  for (refs::ReferenceKind kind : refs::kAllKinds) {
    std::vector<std::string> &chain = chains[std::string(refs::KindName(kind))];
    chain.push_back(kFixtureProviderId);
    switch (kind) {
      case refs::ReferenceKind::kMap:
        chain.push_back(kGeoProviderId);
        break;
      case refs::ReferenceKind::kCalendar:
        chain.push_back(kCalendarProviderId);
        break;
      case refs::ReferenceKind::kWikiSnippet:
        if (settings.wiki_live || !settings.wiki_fixture_dir.empty()) {
          chain.push_back(kWikipediaProviderId);
        }
        break;
      default:
        chain.push_back(kSyntheticProviderId);
        break;
    }
  }
  return chains;
}

void RegisterProviders(refs::ReferenceEngine &engine,
                       const ProviderSettings &settings) {
  const auto timeout = std::chrono::milliseconds(settings.provider_timeout_ms);
  std::map<std::string, std::shared_ptr<refs::ProviderAdapter>> available;
  available[kFixtureProviderId] = std::make_shared<refs::FixtureProvider>(
      kFixtureProviderId, settings.fixture_dir);
  available[kSyntheticProviderId] =
      std::make_shared<refs::SyntheticProvider>(kSyntheticProviderId);
  available[kCalendarProviderId] = std::make_shared<refs::CalendarProvider>();
  if (!settings.geo_path.empty()) {
    available[kGeoProviderId] = std::make_shared<refs::GeoTableProvider>(
        kGeoProviderId, settings.geo_path);
  }
  if (settings.wiki_live) {
    if (!refs::HttpsFetcherAvailable()) {
      throw Error(ErrorCode::kConfigInvalid,
                  "wiki_live requires a build with live providers");
    }
    available[kWikipediaProviderId] = std::make_shared<refs::WikipediaProvider>(
        refs::HttpsFetcher(timeout), kWikipediaProviderId, timeout);
  } else if (!settings.wiki_fixture_dir.empty()) {
    available[kWikipediaProviderId] = std::make_shared<refs::WikipediaProvider>(
        refs::RecordedFetcher(settings.wiki_fixture_dir), kWikipediaProviderId,
        timeout);
  }

  auto chains = DefaultChains(settings);
  for (const auto &[kind, order] : settings.chains) chains[kind] = order;
  for (const auto &[kind_name, order] : chains) {
    auto kind = refs::ParseKind(kind_name);
    if (!kind) {
      throw Error(ErrorCode::kConfigInvalid, "unknown kind " + kind_name);
    }
    int priority = 0;
    for (const std::string &id : order) {
      auto it = available.find(id);
      if (it == available.end()) {
        throw Error(ErrorCode::kConfigInvalid,
                    "chain for " + kind_name + " names unavailable provider " +
                        id);
      }
      engine.RegisterProvider(*kind, it->second, priority++);
    }
  }
}

Runtime::Runtime(ServerConfig config)
    : config_(std::move(config)),
      sessions_(config_.ingest),
      engine_(config_.engine) {
  Validate(config_);
  RegisterProviders(engine_, config_.providers);
  hub_ = std::make_unique<hub::Hub>(sessions_, engine_, HubOptionsFor(config_));
  server_ = std::make_unique<hub::WsServer>(*hub_, config_.server);
}

Runtime::~Runtime() { Stop(); }

void Runtime::Start() {
  server_->Start();
  started_ = true;
}

void Runtime::Stop() {
  if (!started_) return;
  started_ = false;
  server_->Stop();
  hub_->Drain();
  engine_.WaitIdle();
}

uint16_t Runtime::port() const { return server_->port(); }

std::string Runtime::url() const { return server_->url(); }

}  // namespace convoref::app
