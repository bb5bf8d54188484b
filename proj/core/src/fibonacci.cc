// Copyright 2026 The Arndt Compositions Authors
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

#include "arndt/fibonacci.h"

#include <mutex>
#include <stdexcept>
#include <string>

namespace arndt {

FibCache::FibCache() : fib_{0, 1}, lucas_{2, 1} {}

FibCache& FibCache::shared() {
  static FibCache cache;
  return cache;
}

void FibCache::ensure(int n) const {
  if (n < 0) {
    throw std::domain_error("Fibonacci index must be >= 0, got " +
                            std::to_string(n));
  }
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < fib_.size()) return;
  }
  std::unique_lock lock(mutex_);
  while (fib_.size() <= static_cast<std::size_t>(n)) {
    const std::size_t i = fib_.size();
    fib_.push_back(fib_[i - 1] + fib_[i - 2]);
    lucas_.push_back(lucas_[i - 1] + lucas_[i - 2]);
  }
}

BigInt FibCache::fibonacci(int n) const {
  ensure(n);
  std::shared_lock lock(mutex_);
  return fib_[static_cast<std::size_t>(n)];
}

BigInt FibCache::lucas(int n) const {
  ensure(n);
  std::shared_lock lock(mutex_);
  return lucas_[static_cast<std::size_t>(n)];
}

}  // namespace arndt
