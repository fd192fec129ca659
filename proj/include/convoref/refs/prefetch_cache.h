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

#ifndef CONVOREF_REFS_PREFETCH_CACHE_H_
#define CONVOREF_REFS_PREFETCH_CACHE_H_

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "convoref/common/clock.h"
#include "convoref/refs/reference.h"

namespace convoref::refs {

struct CacheKey {
  std::string normalized;
  ReferenceKind kind = ReferenceKind::kImageSet;

  bool operator==(const CacheKey &) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey &k) const noexcept {
    return std::hash<std::string>()(k.normalized) * 31 +
           static_cast<std::size_t>(k.kind);
  }
};

// Thread-safe LRU map from (phrase, kind) to bundles. Entries expire
// `bundle.ttl_s` seconds after insertion on the injected clock; expired
// entries are never returned.
class PrefetchCache {
 public:
  explicit PrefetchCache(std::size_t capacity = 1024,
                         ClockFn clock = SystemSteadyClock());

  // Marks the entry most recently used. Drops it if stale.
  std::optional<ReferenceBundle> Get(const CacheKey &key);

  // Inserts or replaces, evicting the least recently used entry if full.
  void Put(const CacheKey &key, ReferenceBundle bundle);

  // Atomic insert-or-get: stores `bundle` unless a fresh ok entry exists,
  // and returns whichever entry is cached afterwards.
  ReferenceBundle PutIfAbsent(const CacheKey &key, ReferenceBundle bundle);

  bool Contains(const CacheKey &key);
  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  std::size_t evictions() const;
  void Clear();

 private:
  struct Entry {
    CacheKey key;
    ReferenceBundle bundle;
    SteadyClock::time_point expires;
  };
  using List = std::list<Entry>;

  // Requires mu_. Returns end() for misses, erasing stale entries.
  List::iterator FindFresh(const CacheKey &key, SteadyClock::time_point now);
  void InsertLocked(const CacheKey &key, ReferenceBundle bundle,
                    SteadyClock::time_point now);

  const std::size_t capacity_;
  ClockFn clock_;
  mutable std::mutex mu_;
  List lru_;  // front = most recently used
  std::unordered_map<CacheKey, List::iterator, CacheKeyHash> index_;
  std::size_t evictions_ = 0;
};

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_PREFETCH_CACHE_H_
