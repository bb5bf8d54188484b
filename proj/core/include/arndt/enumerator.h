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

#ifndef ARNDT_ENUMERATOR_H_
#define ARNDT_ENUMERATOR_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "arndt/composition.h"
#include "arndt/count_triangle.h"

namespace arndt {

// Exhaustive enumeration visits 2^(n-1) compositions; n above max_n is
// refused unless the caller raises the cap.
struct EnumerationLimits {
  static constexpr int kDefaultMaxN = 28;
  // Counters accumulate in 64-bit words; 2^63 compositions is far beyond reach
  // anyway.
  static constexpr int kHardMaxN = 63;
  int max_n = kDefaultMaxN;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

class CapExceeded : public std::length_error {
 public:
  CapExceeded(int n, int max_n);
  int n() const { return n_; }
  int max_n() const { return max_n_; }

 private:
  int n_;
  int max_n_;
};

// Single-pass input range over the members of `family` with weight n, in
// lexicographically decreasing order of part sequences:
// (4), (3,1), (2,2), (2,1,1), (1,3), (1,2,1), (1,1,2), (1,1,1,1).
class CompositionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class CompositionStream;
    iterator(int n, FamilySpec family);
    bool advance_raw();
    void skip_to_member();

    FamilySpec family_ = FamilySpec::unrestricted();
    std::vector<int> parts_;
    Composition current_;
    bool done_ = true;
  };

  // Throws std::domain_error for n < 0 and CapExceeded for n > limits.max_n.
  CompositionStream(int n, FamilySpec family, EnumerationLimits limits = {});

  iterator begin() const { return iterator(n_, family_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  FamilySpec family_;
};

CompositionStream compositions_of(int n, EnumerationLimits limits = {});
CompositionStream members_of(int n, FamilySpec family,
                             EnumerationLimits limits = {});
// One representative (sigma_i > sigma_{l+1-i}) per flip class of
// anti-palindromic compositions of n.
CompositionStream enumerate_reduced_ap(int n, EnumerationLimits limits = {});

// Everything the brute-force counters report for one weight, computed in a
// single pass.
struct FamilyStats {
  std::vector<BigInt> by_parts;  // index m: members with m parts
  std::vector<BigInt> by_last;   // index m: members whose last part is m
  BigInt members;
  BigInt total_parts;
  BigInt total_last;
};

// Parallel over the 2^(n-1) cut masks; results do not depend on thread count.
FamilyStats brute_force_stats(int n, FamilySpec family,
                              EnumerationLimits limits = {});

// Row n of a(n, m), a_k(n, m), a^(k)(n, m), ... by brute force.
std::vector<BigInt> count_by_parts(int n, FamilySpec family,
                                   EnumerationLimits limits = {});
// Row n of b(n, m). The empty composition counts toward (0, 0).
std::vector<BigInt> count_by_last(int n, FamilySpec family,
                                  EnumerationLimits limits = {});
BigInt count_members(int n, FamilySpec family, EnumerationLimits limits = {});

// p(n): parts summed over all Arndt compositions of n.
BigInt total_parts(int n, EnumerationLimits limits = {});
// d(n): last parts summed over all Arndt compositions of n.
BigInt total_last(int n, EnumerationLimits limits = {});

CountTriangle parts_triangle(int max_n, FamilySpec family,
                             EnumerationLimits limits = {});
CountTriangle last_triangle(int max_n, FamilySpec family,
                            EnumerationLimits limits = {});

}  // namespace arndt

#endif  // ARNDT_ENUMERATOR_H_
