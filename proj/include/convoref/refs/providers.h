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

#ifndef CONVOREF_REFS_PROVIDERS_H_
#define CONVOREF_REFS_PROVIDERS_H_

#include <chrono>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "convoref/nlp/types.h"
#include "convoref/refs/reference.h"
#include "json.hpp"

namespace convoref::refs {

struct ProviderQuery {
  std::string phrase;
  std::string normalized;
  nlp::EntityCategory category = nlp::EntityCategory::kGeneral;
  ReferenceKind kind = ReferenceKind::kImageSet;
};

// Raised by adapters when they cannot serve a query.
class ProviderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A source of reference payloads. Query() returns a payload matching
// ValidatePayload(query.kind) or throws. Adapters may be called from several
// threads at once.
class ProviderAdapter {
 public:
  virtual ~ProviderAdapter() = default;

  virtual const std::string &id() const = 0;

  // Upper bound the engine allows a single Query() call.
  virtual std::chrono::milliseconds timeout() const {
    return std::chrono::milliseconds(2000);
  }

  // Local adapters answer from memory or disk without blocking on the
  // network; the engine calls them inline instead of on a watchdog thread.
  virtual bool is_local() const { return false; }

  virtual nlohmann::json Query(const ProviderQuery &query) = 0;
};

// Serves `<dir>/<slug(phrase)>.<kind>` JSON documents.
class FixtureProvider : public ProviderAdapter {
 public:
  FixtureProvider(std::string id, std::string dir);

  const std::string &id() const override { return id_; }
  bool is_local() const override { return true; }
  nlohmann::json Query(const ProviderQuery &query) override;

  static std::string FileName(std::string_view phrase, ReferenceKind kind);

 private:
  std::string id_;
  std::string dir_;
};

// Deterministic offline stand-in for the search, image, news and weather
// services: payloads are pure functions of (phrase, kind) pointing at
// example.org. Map and wiki queries are refused, since inventing those
// would mislead.
class SyntheticProvider : public ProviderAdapter {
 public:
  explicit SyntheticProvider(std::string id = "synthetic");

  const std::string &id() const override { return id_; }
  bool is_local() const override { return true; }
  nlohmann::json Query(const ProviderQuery &query) override;

 private:
  std::string id_;
};

// Map bundles from a table of known coordinates (TSV: name, lat, lon, zoom).
class GeoTableProvider : public ProviderAdapter {
 public:
  GeoTableProvider(std::string id, const std::string &tsv_path);

  const std::string &id() const override { return id_; }
  bool is_local() const override { return true; }
  nlohmann::json Query(const ProviderQuery &query) override;

  std::size_t size() const { return places_.size(); }

 private:
  struct Place {
    std::string name;
    double lat;
    double lon;
    int zoom;
  };
  std::string id_;
  std::map<std::string, Place> places_;  // keyed by normalized name
};

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_PROVIDERS_H_
