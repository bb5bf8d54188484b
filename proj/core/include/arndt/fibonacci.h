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

#ifndef ARNDT_FIBONACCI_H_
#define ARNDT_FIBONACCI_H_

#include <shared_mutex>
#include <vector>

#include "arndt/count_triangle.h"

namespace arndt {

// Growable tables of F_n (F_0 = 0, F_1 = 1) and Lucas L_n (L_0 = 2, L_1 = 1).
// Safe for concurrent use: readers share a lock, growth takes it exclusively,
// and every caller observes a consistent prefix.
class FibCache {
 public:
  FibCache();

  // Throws std::domain_error for n < 0.
  BigInt fibonacci(int n) const;
  BigInt lucas(int n) const;

  // Process-wide instance.
  static FibCache& shared();

 private:
  void ensure(int n) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<BigInt> fib_;
  mutable std::vector<BigInt> lucas_;
};

inline BigInt fibonacci(int n) { return FibCache::shared().fibonacci(n); }
inline BigInt lucas(int n) { return FibCache::shared().lucas(n); }

}  // namespace arndt

#endif  // ARNDT_FIBONACCI_H_
