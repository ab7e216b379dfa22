// Copyright 2026 The streetnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "streetnav/location_cache.h"

#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "streetnav/caching_providers.h"
#include "streetnav/synthetic.h"
#include "streetnav/world.h"

namespace streetnav {
namespace {

TEST(LocationCacheTest, QuantizesNearbyPointsToOneKey) {
  const GeoPoint p{47.0, -122.0};
  EXPECT_EQ(MakeCacheKey("k", p), MakeCacheKey("k", GeoPoint{47.000001, -122.000004}));
  EXPECT_NE(MakeCacheKey("k", p), MakeCacheKey("k", GeoPoint{47.00002, -122.0}));
  EXPECT_NE(MakeCacheKey("k", p, "10"), MakeCacheKey("k", p, "20"));
}

TEST(LocationCacheTest, HitsMissesAndLruEviction) {
  LocationCache<int> cache({.capacity = 2});
  int calls = 0;
  auto fetch = [&](int v) {
    return [&calls, v]() -> absl::StatusOr<int> {
      ++calls;
      return v;
    };
  };
  const CacheKey a = MakeCacheKey("a", "1"), b = MakeCacheKey("b", "1"),
                 c = MakeCacheKey("c", "1");
  EXPECT_EQ(*cache.GetOrFetch(a, fetch(1)), 1);
  EXPECT_EQ(*cache.GetOrFetch(b, fetch(2)), 2);
  EXPECT_EQ(*cache.GetOrFetch(a, fetch(9)), 1);  // hit refreshes a
  EXPECT_EQ(*cache.GetOrFetch(c, fetch(3)), 3);  // evicts b
  EXPECT_TRUE(cache.Contains(a));
  EXPECT_FALSE(cache.Contains(b));
  EXPECT_EQ(calls, 3);
  EXPECT_EQ(cache.stats().hits, 1u);
  EXPECT_EQ(cache.stats().misses, 3u);
  EXPECT_EQ(cache.stats().evictions, 1u);
}

TEST(LocationCacheTest, FailuresAreNotCachedByDefault) {
  LocationCache<int> cache;
  int calls = 0;
  auto failing = [&]() -> absl::StatusOr<int> {
    ++calls;
    return absl::UnavailableError("down");
  };
  const CacheKey k = MakeCacheKey("k", "x");
  EXPECT_FALSE(cache.GetOrFetch(k, failing).ok());
  EXPECT_FALSE(cache.GetOrFetch(k, failing).ok());
  EXPECT_EQ(calls, 2);

  LocationCache<int> sticky({.capacity = 4, .cache_failures = true});
  calls = 0;
  EXPECT_FALSE(sticky.GetOrFetch(k, failing).ok());
  EXPECT_FALSE(sticky.GetOrFetch(k, failing).ok());
  EXPECT_EQ(calls, 1);
}

TEST(LocationCacheTest, SingleFlightUnderConcurrency) {
  LocationCache<int> cache;
  std::atomic<int> calls{0};
  const CacheKey k = MakeCacheKey("k", "same");
  std::vector<std::thread> threads;
  std::atomic<int> sum{0};
  for (int i = 0; i < 16; ++i) {
    threads.emplace_back([&] {
      auto v = cache.GetOrFetch(k, [&]() -> absl::StatusOr<int> {
        ++calls;
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
        return 7;
      });
      sum += *v;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(calls.load(), 1);
  EXPECT_EQ(sum.load(), 16 * 7);
}

TEST(CachingMapServicesTest, ResultsMatchUpstream) {
  auto world = *World::Create(synthetic::MakeCrossroads());
  CachingMapServices cached(world->services());
  const MapServices s = cached.services();
  const GeoPoint c = world->FindPano("m040")->location;
  for (int i = 0; i < 3; ++i) {
    auto a = s.panoramas->PanosInGrid(c, 10);
    auto b = world->PanosInGrid(c, 10);
    ASSERT_EQ(a->size(), b->size());
    EXPECT_EQ(s.roads->RoadsInGrid(c, 10)->size(),
              world->RoadsInGrid(c, 10)->size());
    EXPECT_EQ(s.panoramas->GetPanorama("x_int")->id, "x_int");
  }
  EXPECT_EQ(cached.TotalStats().misses, 3u);
  EXPECT_EQ(cached.TotalStats().hits, 6u);
  EXPECT_FALSE(s.panoramas->GetPanorama("missing").ok());
}

}  // namespace
}  // namespace streetnav
