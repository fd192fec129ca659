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

#include <random>
#include <thread>

#include "convoref/common/error.h"
#include "doctest.h"

namespace convoref::refs {
namespace {

struct FakeClock {
  SteadyClock::time_point now{};
  ClockFn fn() {
    return [this] { return now; };
  }
  void Advance(std::chrono::seconds s) { now += s; }
};

ReferenceBundle Ok(int ttl_s, std::string provider = "p") {
  ReferenceBundle b;
  b.status = BundleStatus::kOk;
  b.ttl_s = ttl_s;
  b.provider_id = std::move(provider);
  return b;
}

CacheKey Key(int i, ReferenceKind k = ReferenceKind::kImageSet) {
  return {"phrase " + std::to_string(i), k};
}

TEST_CASE("Get returns what Put stored, per kind") {
  PrefetchCache cache(8);
  cache.Put(Key(1), Ok(60, "a"));
  cache.Put(Key(1, ReferenceKind::kMap), Ok(60, "b"));
  REQUIRE(cache.Get(Key(1)));
  CHECK(cache.Get(Key(1))->provider_id == "a");
  CHECK(cache.Get(Key(1, ReferenceKind::kMap))->provider_id == "b");
  CHECK_FALSE(cache.Get(Key(2)));
  CHECK(cache.size() == 2);
  CHECK_THROWS_AS(PrefetchCache(0), Error);
}

TEST_CASE("Least recently used entry is evicted first") {
  PrefetchCache cache(3);
  cache.Put(Key(1), Ok(60));
  cache.Put(Key(2), Ok(60));
  cache.Put(Key(3), Ok(60));
  CHECK(cache.Get(Key(1)));  // 1 is now most recent
  cache.Put(Key(4), Ok(60));
  CHECK(cache.size() == 3);
  CHECK_FALSE(cache.Contains(Key(2)));
  CHECK(cache.Contains(Key(1)));
  CHECK(cache.Contains(Key(3)));
  CHECK(cache.Contains(Key(4)));
  CHECK(cache.evictions() == 1);
}

TEST_CASE("Stale entries are never served") {
  FakeClock clock;
  PrefetchCache cache(4, clock.fn());
  cache.Put(Key(1), Ok(600));
  cache.Put(Key(2), Ok(300));
  clock.Advance(std::chrono::seconds(299));
  CHECK(cache.Contains(Key(2)));
  clock.Advance(std::chrono::seconds(1));
  CHECK_FALSE(cache.Get(Key(2)));
  CHECK(cache.size() == 1);
  clock.Advance(std::chrono::seconds(300));
  CHECK_FALSE(cache.Get(Key(1)));
  CHECK(cache.size() == 0);
}

TEST_CASE("PutIfAbsent keeps fresh ok entries and replaces failures") {
  FakeClock clock;
  PrefetchCache cache(4, clock.fn());
  CHECK(cache.PutIfAbsent(Key(1), Ok(60, "first")).provider_id == "first");
  CHECK(cache.PutIfAbsent(Key(1), Ok(60, "second")).provider_id == "first");
  ReferenceBundle failed = Ok(30, "");
  failed.status = BundleStatus::kUnavailable;
  cache.Put(Key(2), failed);
  CHECK(cache.PutIfAbsent(Key(2), Ok(60, "fixed")).provider_id == "fixed");
  clock.Advance(std::chrono::seconds(61));
  CHECK(cache.PutIfAbsent(Key(1), Ok(60, "third")).provider_id == "third");
}

TEST_CASE("Capacity bound holds over 10000 inserts and recent entries survive") {
  PrefetchCache cache(1024);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> kind(0, 6);
  std::vector<CacheKey> inserted;
  for (int i = 0; i < 10000; ++i) {
    CacheKey key{"k" + std::to_string(i),
                 static_cast<ReferenceKind>(kind(rng))};
    cache.Put(key, Ok(600));
    inserted.push_back(key);
    REQUIRE(cache.size() <= 1024);
  }
  CHECK(cache.size() == 1024);
  for (int i = 10000 - 1024; i < 10000; ++i) {
    CHECK(cache.Contains(inserted[i]));
  }
  CHECK_FALSE(cache.Contains(inserted[10000 - 1025]));
}

TEST_CASE("Recently read entries survive churn") {
  PrefetchCache cache(16);
  cache.Put(Key(0), Ok(600));
  for (int i = 1; i < 200; ++i) {
    cache.Put(Key(i), Ok(600));
    REQUIRE(cache.Get(Key(0)));  // keep touching the hot entry
  }
  CHECK(cache.Contains(Key(0)));
}

TEST_CASE("Concurrent readers and writers keep the bound") {
  PrefetchCache cache(64);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 2000; ++i) {
        cache.Put(Key(t * 10000 + i), Ok(600));
        cache.Get(Key(t * 10000 + i / 2));
      }
    });
  }
  for (auto &th : threads) th.join();
  CHECK(cache.size() == 64);
}

}  // namespace
}  // namespace convoref::refs
