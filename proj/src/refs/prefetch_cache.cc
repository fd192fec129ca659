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

#include "convoref/refs/prefetch_cache.h"

#include "convoref/common/error.h"

namespace convoref::refs {

PrefetchCache::PrefetchCache(std::size_t capacity, ClockFn clock)
    : capacity_(capacity), clock_(std::move(clock)) {
  if (capacity_ == 0) {
    throw Error(ErrorCode::kConfigInvalid, "cache capacity must be positive");
  }
}

PrefetchCache::List::iterator PrefetchCache::FindFresh(
    const CacheKey &key, SteadyClock::time_point now) {
  auto it = index_.find(key);
  if (it == index_.end()) return lru_.end();
  if (now >= it->second->expires) {
    lru_.erase(it->second);
    index_.erase(it);
    return lru_.end();
  }
  lru_.splice(lru_.begin(), lru_, it->second);
  return it->second;
}

void PrefetchCache::InsertLocked(const CacheKey &key, ReferenceBundle bundle,
                                 SteadyClock::time_point now) {
  auto expires = now + std::chrono::seconds(bundle.ttl_s);
  if (auto it = index_.find(key); it != index_.end()) {
    it->second->bundle = std::move(bundle);
    it->second->expires = expires;
    lru_.splice(lru_.begin(), lru_, it->second);
    return;
  }
  if (lru_.size() >= capacity_) {
    index_.erase(lru_.back().key);
    lru_.pop_back();
    ++evictions_;
  }
  lru_.push_front(Entry{key, std::move(bundle), expires});
  index_.emplace(key, lru_.begin());
}

std::optional<ReferenceBundle> PrefetchCache::Get(const CacheKey &key) {
  const auto now = clock_();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = FindFresh(key, now);
  if (it == lru_.end()) return std::nullopt;
  return it->bundle;
}

void PrefetchCache::Put(const CacheKey &key, ReferenceBundle bundle) {
  const auto now = clock_();
  std::lock_guard<std::mutex> lock(mu_);
  InsertLocked(key, std::move(bundle), now);
}

ReferenceBundle PrefetchCache::PutIfAbsent(const CacheKey &key,
                                           ReferenceBundle bundle) {
  const auto now = clock_();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = FindFresh(key, now);
  if (it != lru_.end() && it->bundle.ok()) return it->bundle;
  InsertLocked(key, bundle, now);
  return bundle;
}

bool PrefetchCache::Contains(const CacheKey &key) {
  return Get(key).has_value();
}

std::size_t PrefetchCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lru_.size();
}

std::size_t PrefetchCache::evictions() const {
  std::lock_guard<std::mutex> lock(mu_);
  return evictions_;
}

void PrefetchCache::Clear() {
  std::lock_guard<std::mutex> lock(mu_);
  lru_.clear();
  index_.clear();
}

}  // namespace convoref::refs
