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

#ifndef CONVOREF_REFS_REFERENCE_ENGINE_H_
#define CONVOREF_REFS_REFERENCE_ENGINE_H_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/asio/thread_pool.hpp>

#include "convoref/common/clock.h"
#include "convoref/nlp/types.h"
#include "convoref/refs/prefetch_cache.h"
#include "convoref/refs/providers.h"
#include "convoref/refs/reference.h"

namespace convoref::refs {

struct EngineOptions {
  std::size_t cache_capacity = 1024;
  int ttl_s = 600;
  int weather_ttl_s = 300;
  // Failed lookups are remembered briefly, then retried.
  int unavailable_ttl_s = 30;
  // Total time one provider chain may take, across attempts.
  std::chrono::milliseconds chain_budget{5000};
  // Concurrent background provider calls.
  std::size_t prefetch_parallelism = 4;
  ClockFn clock = SystemSteadyClock();
};

// What the engine knows about a broadcast keyword.
struct KeywordRef {
  std::string id;
  std::string phrase;
  std::string normalized;
  nlp::EntityCategory category = nlp::EntityCategory::kGeneral;
};

using BundleCallback =
    std::function<void(const KeywordRef &, const ReferenceBundle &)>;

// Routes keywords to provider chains and caches the results.
//
// Provider chains are configured per kind; Resolve() walks a chain in
// priority order until one provider returns a valid payload. Prefetch()
// warms the cache for the eagerly fetched kinds on a bounded background
// pool. Concurrent requests for the same (phrase, kind) share one chain
// run.
class ReferenceEngine {
 public:
  explicit ReferenceEngine(EngineOptions options = {});
  ~ReferenceEngine();

  ReferenceEngine(const ReferenceEngine &) = delete;
  ReferenceEngine &operator=(const ReferenceEngine &) = delete;

  // Lower priority values are tried first; ties keep registration order.
  // Throws Error(kDuplicateProvider) if `provider->id()` is already in the
  // chain for `kind`.
  void RegisterProvider(ReferenceKind kind,
                        std::shared_ptr<ProviderAdapter> provider,
                        int priority);

  // Provider ids for `kind` in attempt order.
  std::vector<std::string> Chain(ReferenceKind kind) const;

  void RegisterKeyword(const nlp::Keyword &keyword);
  std::optional<KeywordRef> FindKeyword(std::string_view keyword_id) const;

  // Registers the keywords and fetches their eagerly fetched kinds in the
  // background. `on_ready` runs on a pool thread once per (keyword, kind),
  // including failures (bundle status unavailable). Never blocks on
  // providers.
  void Prefetch(const std::vector<nlp::Keyword> &keywords,
                BundleCallback on_ready = {});

  // Cache-first lookup, then the provider chain. Throws
  // Error(kKeywordNotFound) for unknown ids and Error(kProvidersUnavailable)
  // listing each provider's failure when the whole chain fails.
  ReferenceBundle Resolve(std::string_view keyword_id, ReferenceKind kind);

  // Like Resolve() but returns failed lookups as unavailable bundles.
  ReferenceBundle ResolveBundle(std::string_view keyword_id,
                                ReferenceKind kind);

  // A fresh cached bundle (ok or unavailable) without calling providers.
  // Throws Error(kKeywordNotFound) for unknown ids.
  std::optional<ReferenceBundle> TryCached(std::string_view keyword_id,
                                           ReferenceKind kind);

  // Blocks until every queued prefetch has finished.
  void WaitIdle();

  std::size_t pending_prefetches() const;
  uint64_t provider_calls() const { return total_calls_.load(); }
  uint64_t provider_calls(std::string_view provider_id) const;

  PrefetchCache &cache() { return cache_; }
  const EngineOptions &options() const { return options_; }

 private:
  struct Registered {
    std::shared_ptr<ProviderAdapter> provider;
    int priority;
  };

  KeywordRef RequireKeyword(std::string_view keyword_id) const;
  std::shared_future<ReferenceBundle> Fetch(const KeywordRef &ref,
                                            ReferenceKind kind);
  ReferenceBundle RunChain(const KeywordRef &ref, ReferenceKind kind);
  nlohmann::json Attempt(const std::shared_ptr<ProviderAdapter> &provider,
                         const ProviderQuery &query,
                         std::chrono::milliseconds timeout);
  void CountCall(const std::string &provider_id);
  int TtlFor(ReferenceKind kind, bool ok) const;

  EngineOptions options_;
  PrefetchCache cache_;

  mutable std::shared_mutex providers_mu_;
  std::map<ReferenceKind, std::vector<Registered>> chains_;

  mutable std::shared_mutex keywords_mu_;
  std::unordered_map<std::string, KeywordRef> keywords_;

  std::mutex inflight_mu_;
  std::unordered_map<CacheKey, std::shared_future<ReferenceBundle>,
                     CacheKeyHash>
      inflight_;

  mutable std::mutex calls_mu_;
  std::map<std::string, uint64_t, std::less<>> calls_;
  std::atomic<uint64_t> total_calls_{0};

  mutable std::mutex idle_mu_;
  std::condition_variable idle_cv_;
  std::size_t pending_ = 0;

  boost::asio::thread_pool pool_;
};

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_REFERENCE_ENGINE_H_
