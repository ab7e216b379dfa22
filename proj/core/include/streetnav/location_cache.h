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


#ifndef STREETNAV_LOCATION_CACHE_H_
#define STREETNAV_LOCATION_CACHE_H_

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "absl/hash/hash.h"
#include "absl/status/statusor.h"
#include "streetnav/geo.h"

namespace streetnav {

// Degrees per quantization step of a cache key (about 1.1 m of latitude).
inline constexpr double kCacheQuantumDegrees = 1e-5;

struct CacheKey {
  std::string kind;    // query kind, e.g. "panos_in_grid"
  int64_t qlat = 0;    // round(lat / quantum)
  int64_t qlng = 0;
  std::string detail;  // extra query arguments (extent, radius, id, text)

  friend bool operator==(const CacheKey&, const CacheKey&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const CacheKey& k) {
    return H::combine(std::move(h), k.kind, k.qlat, k.qlng, k.detail);
  }
};

CacheKey MakeCacheKey(std::string kind, const GeoPoint& p,
                      std::string detail = {});
// Keys for queries that carry no location (lookups by id or text).
CacheKey MakeCacheKey(std::string kind, std::string detail);

struct LocationCacheOptions {
  size_t capacity = 4096;
  bool cache_failures = false;
};

struct CacheStats {
  uint64_t hits = 0;
  uint64_t misses = 0;
  uint64_t evictions = 0;
};

// Bounded LRU keyed by quantized location. Concurrent GetOrFetch calls for
// the same key run `fetch` at most once; the others wait for its result.
template <typename V>
class LocationCache {
 public:
  using Fetch = std::function<absl::StatusOr<V>()>;

  explicit LocationCache(LocationCacheOptions options = {})
      : options_(options) {}

  LocationCache(const LocationCache&) = delete;
  LocationCache& operator=(const LocationCache&) = delete;

  absl::StatusOr<V> GetOrFetch(const CacheKey& key, const Fetch& fetch) {
    std::unique_lock<std::mutex> lock(mu_);
    for (;;) {
      if (auto it = index_.find(key); it != index_.end()) {
        lru_.splice(lru_.begin(), lru_, it->second);
        ++stats_.hits;
        return it->second->second;
      }
      if (!in_flight_.contains(key)) break;
      cv_.wait(lock);
    }
    ++stats_.misses;
    in_flight_.insert(key);
    lock.unlock();
    absl::StatusOr<V> result = fetch();
    lock.lock();
    in_flight_.erase(key);
    if (result.ok() || options_.cache_failures) Insert(key, result);
    cv_.notify_all();
    return result;
  }

  size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return lru_.size();
  }

  bool Contains(const CacheKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    return index_.contains(key);
  }

  CacheStats stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
  }

 private:
  using Entry = std::pair<CacheKey, absl::StatusOr<V>>;

  void Insert(const CacheKey& key, absl::StatusOr<V> value) {
    lru_.emplace_front(key, std::move(value));
    index_[key] = lru_.begin();
    while (lru_.size() > options_.capacity) {
      index_.erase(lru_.back().first);
      lru_.pop_back();
      ++stats_.evictions;
    }
  }

  const LocationCacheOptions options_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::list<Entry> lru_;  // most recent first
  std::unordered_map<CacheKey, typename std::list<Entry>::iterator,
                     absl::Hash<CacheKey>>
      index_;
  std::unordered_set<CacheKey, absl::Hash<CacheKey>> in_flight_;
  CacheStats stats_;
};

}  // namespace streetnav

#endif  // STREETNAV_LOCATION_CACHE_H_
