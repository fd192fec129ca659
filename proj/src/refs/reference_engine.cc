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

#include "convoref/refs/reference_engine.h"

#include <algorithm>
#include <thread>

#include <boost/asio/post.hpp>

#include "convoref/common/error.h"
#include "convoref/refs/routing.h"

namespace convoref::refs {

using nlohmann::json;

ReferenceEngine::ReferenceEngine(EngineOptions options)
    : options_(std::move(options)),
      cache_(options_.cache_capacity, options_.clock),
      pool_(std::max<std::size_t>(1, options_.prefetch_parallelism)) {}

ReferenceEngine::~ReferenceEngine() { pool_.join(); }

void ReferenceEngine::RegisterProvider(
    ReferenceKind kind, std::shared_ptr<ProviderAdapter> provider,
    int priority) {
  std::unique_lock lock(providers_mu_);
  auto &chain = chains_[kind];
  for (const Registered &r : chain) {
    if (r.provider->id() == provider->id()) {
      throw Error(ErrorCode::kDuplicateProvider,
                  provider->id() + " already serves " +
                      std::string(KindName(kind)));
    }
  }
  auto pos = std::upper_bound(
      chain.begin(), chain.end(), priority,
      [](int p, const Registered &r) { return p < r.priority; });
  chain.insert(pos, Registered{std::move(provider), priority});
}

std::vector<std::string> ReferenceEngine::Chain(ReferenceKind kind) const {
  std::shared_lock lock(providers_mu_);
  std::vector<std::string> ids;
  if (auto it = chains_.find(kind); it != chains_.end()) {
    for (const Registered &r : it->second) ids.push_back(r.provider->id());
  }
  return ids;
}

void ReferenceEngine::RegisterKeyword(const nlp::Keyword &keyword) {
  std::unique_lock lock(keywords_mu_);
  keywords_[keyword.id] = KeywordRef{keyword.id, keyword.phrase,
                                     keyword.normalized, keyword.category};
}

std::optional<KeywordRef> ReferenceEngine::FindKeyword(
    std::string_view keyword_id) const {
  std::shared_lock lock(keywords_mu_);
  auto it = keywords_.find(std::string(keyword_id));
  if (it == keywords_.end()) return std::nullopt;
  return it->second;
}

KeywordRef ReferenceEngine::RequireKeyword(std::string_view keyword_id) const {
  auto ref = FindKeyword(keyword_id);
  if (!ref) {
    throw Error(ErrorCode::kKeywordNotFound,
                "unknown keyword " + std::string(keyword_id));
  }
  return *ref;
}

int ReferenceEngine::TtlFor(ReferenceKind kind, bool ok) const {
  if (!ok) return options_.unavailable_ttl_s;
  return kind == ReferenceKind::kWeather ? options_.weather_ttl_s
                                         : options_.ttl_s;
}

void ReferenceEngine::CountCall(const std::string &provider_id) {
  total_calls_.fetch_add(1);
  std::lock_guard<std::mutex> lock(calls_mu_);
  ++calls_[provider_id];
}

uint64_t ReferenceEngine::provider_calls(std::string_view provider_id) const {
  std::lock_guard<std::mutex> lock(calls_mu_);
  auto it = calls_.find(provider_id);
  return it == calls_.end() ? 0 : it->second;
}

json ReferenceEngine::Attempt(const std::shared_ptr<ProviderAdapter> &provider,
                              const ProviderQuery &query,
                              std::chrono::milliseconds timeout) {
  if (provider->is_local()) return provider->Query(query);
  // Remote adapters run on a watchdog thread so a hung call cannot hold the
  // chain past its timeout. The thread keeps the adapter alive until the
  // call returns on its own.
  auto promise = std::make_shared<std::promise<json>>();
  std::future<json> result = promise->get_future();
  std::thread([provider, query, promise] {
    try {
      promise->set_value(provider->Query(query));
    } catch (...) {
      promise->set_exception(std::current_exception());
    }
  }).detach();
  if (result.wait_for(timeout) != std::future_status::ready) {
    throw ProviderError("timed out after " + std::to_string(timeout.count()) +
                        " ms");
  }
  return result.get();
}

ReferenceBundle ReferenceEngine::RunChain(const KeywordRef &ref,
                                          ReferenceKind kind) {
  std::vector<Registered> chain;
  {
    std::shared_lock lock(providers_mu_);
    if (auto it = chains_.find(kind); it != chains_.end()) chain = it->second;
  }
  ReferenceBundle bundle;
  bundle.keyword_id = ref.id;
  bundle.kind = kind;
  const ProviderQuery query{ref.phrase, ref.normalized, ref.category, kind};
  const auto deadline = options_.clock() + options_.chain_budget;
  for (const Registered &r : chain) {
    const std::string &id = r.provider->id();
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - options_.clock());
    if (remaining.count() <= 0) {
      bundle.failures.push_back({id, "chain budget exhausted"});
      continue;
    }
    CountCall(id);
    try {
      json payload =
          Attempt(r.provider, query, std::min(r.provider->timeout(), remaining));
      if (auto err = ValidatePayload(kind, payload)) {
        bundle.failures.push_back({id, "invalid payload: " + *err});
        continue;
      }
      bundle.status = BundleStatus::kOk;
      bundle.payload = std::move(payload);
      bundle.provider_id = id;
      bundle.fetched_at_ms = UnixMs();
      bundle.ttl_s = TtlFor(kind, true);
      return bundle;
    } catch (const std::exception &e) {
      bundle.failures.push_back({id, e.what()});
    } catch (...) {
      bundle.failures.push_back({id, "unknown failure"});
    }
  }
  if (chain.empty()) {
    bundle.failures.push_back(
        {"", "no providers for " + std::string(KindName(kind))});
  }
  bundle.status = BundleStatus::kUnavailable;
  bundle.payload = json();
  bundle.fetched_at_ms = UnixMs();
  bundle.ttl_s = TtlFor(kind, false);
  return bundle;
}

std::shared_future<ReferenceBundle> ReferenceEngine::Fetch(
    const KeywordRef &ref, ReferenceKind kind) {
  CacheKey key{ref.normalized, kind};
  std::promise<ReferenceBundle> promise;
  {
    std::lock_guard<std::mutex> lock(inflight_mu_);
    if (auto it = inflight_.find(key); it != inflight_.end()) {
      return it->second;
    }
    // Another thread may have finished this key between our cache check
    // and taking the lock.
    if (auto cached = cache_.Get(key); cached && cached->ok()) {
      promise.set_value(*cached);
      return promise.get_future().share();
    }
    inflight_.emplace(key, promise.get_future().share());
  }
  std::shared_future<ReferenceBundle> future;
  ReferenceBundle bundle;
  try {
    bundle = RunChain(ref, kind);
  } catch (...) {
    std::lock_guard<std::mutex> lock(inflight_mu_);
    future = inflight_.at(key);
    inflight_.erase(key);
    promise.set_exception(std::current_exception());
    return future;
  }
  // Publish to the cache before retiring the in-flight entry so readers
  // always find one or the other.
  bundle = cache_.PutIfAbsent(key, std::move(bundle));
  {
    std::lock_guard<std::mutex> lock(inflight_mu_);
    future = inflight_.at(key);
    inflight_.erase(key);
  }
  promise.set_value(std::move(bundle));
  return future;
}

ReferenceBundle ReferenceEngine::ResolveBundle(std::string_view keyword_id,
                                               ReferenceKind kind) {
  KeywordRef ref = RequireKeyword(keyword_id);
  ReferenceBundle bundle;
  if (auto cached = cache_.Get({ref.normalized, kind}); cached && cached->ok()) {
    bundle = std::move(*cached);
  } else {
    bundle = Fetch(ref, kind).get();
  }
  bundle.keyword_id = ref.id;
  return bundle;
}

ReferenceBundle ReferenceEngine::Resolve(std::string_view keyword_id,
                                         ReferenceKind kind) {
  ReferenceBundle bundle = ResolveBundle(keyword_id, kind);
  if (!bundle.ok()) {
    std::string detail = std::string(KindName(kind)) + " for " +
                         std::string(keyword_id) + ":";
    for (const auto &f : bundle.failures) {
      detail += " [" + (f.provider_id.empty() ? "-" : f.provider_id) + ": " +
                f.reason + "]";
    }
    throw Error(ErrorCode::kProvidersUnavailable, detail);
  }
  return bundle;
}

std::optional<ReferenceBundle> ReferenceEngine::TryCached(
    std::string_view keyword_id, ReferenceKind kind) {
  KeywordRef ref = RequireKeyword(keyword_id);
  auto cached = cache_.Get({ref.normalized, kind});
  if (cached) cached->keyword_id = ref.id;
  return cached;
}

void ReferenceEngine::Prefetch(const std::vector<nlp::Keyword> &keywords,
                               BundleCallback on_ready) {
  for (const nlp::Keyword &kw : keywords) RegisterKeyword(kw);
  for (const nlp::Keyword &kw : keywords) {
    KeywordRef ref{kw.id, kw.phrase, kw.normalized, kw.category};
    for (ReferenceKind kind : PlanReferences(kw.category)) {
      if (!IsPrefetchKind(kind)) continue;
      {
        std::lock_guard<std::mutex> lock(idle_mu_);
        ++pending_;
      }
      boost::asio::post(pool_, [this, ref, kind, on_ready] {
        try {
          ReferenceBundle bundle;
          auto cached = cache_.Get({ref.normalized, kind});
          bundle = cached && cached->ok() ? std::move(*cached)
                                          : Fetch(ref, kind).get();
          bundle.keyword_id = ref.id;
          if (on_ready) on_ready(ref, bundle);
        } catch (...) {
          // Prefetch failures are recorded in the cache, never raised.
        }
        std::lock_guard<std::mutex> lock(idle_mu_);
        if (--pending_ == 0) idle_cv_.notify_all();
      });
    }
  }
}

void ReferenceEngine::WaitIdle() {
  std::unique_lock<std::mutex> lock(idle_mu_);
  idle_cv_.wait(lock, [this] { return pending_ == 0; });
}

std::size_t ReferenceEngine::pending_prefetches() const {
  std::lock_guard<std::mutex> lock(idle_mu_);
  return pending_;
}

}  // namespace convoref::refs
