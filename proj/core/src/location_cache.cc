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

#include <cmath>

namespace streetnav {

CacheKey MakeCacheKey(std::string kind, const GeoPoint& p,
                      std::string detail) {
  return CacheKey{std::move(kind),
                  static_cast<int64_t>(std::llround(p.lat / kCacheQuantumDegrees)),
                  static_cast<int64_t>(std::llround(p.lng / kCacheQuantumDegrees)),
                  std::move(detail)};
}

CacheKey MakeCacheKey(std::string kind, std::string detail) {
  return CacheKey{std::move(kind), 0, 0, std::move(detail)};
}

}  // namespace streetnav
