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

#include "arndt/enumerator.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <utility>

namespace arndt {
namespace {

void check_range(int n, const EnumerationLimits& limits) {
  if (n < 0) {
    throw std::domain_error("weight must be >= 0, got " + std::to_string(n));
  }
  const int cap = std::min(limits.max_n, EnumerationLimits::kHardMaxN);
  if (n > cap) throw CapExceeded(n, cap);
}

// Word-sized accumulators for one worker; converted to BigInt when merged.
struct LocalStats {
  explicit LocalStats(int n)
      : by_parts(static_cast<std::size_t>(n) + 1, 0),
        by_last(static_cast<std::size_t>(n) + 1, 0) {}
  std::vector<std::uint64_t> by_parts;
  std::vector<std::uint64_t> by_last;
  std::uint64_t members = 0;
  std::uint64_t total_parts = 0;
  std::uint64_t total_last = 0;
};

// Bit j of `mask` set means a cut between positions j+1 and j+2 of the
// n-cell strip.
void scan_masks(int n, const FamilySpec& family, std::uint64_t first,
                std::uint64_t last, LocalStats& stats) {
  std::array<int, EnumerationLimits::kHardMaxN + 1> buffer{};
  for (std::uint64_t mask = first; mask < last; ++mask) {
    int count = 0;
    int run = 1;
    for (int j = 0; j < n - 1; ++j) {
      if ((mask >> j) & 1U) {
        buffer[static_cast<std::size_t>(count++)] = run;
        run = 1;
      } else {
        ++run;
      }
    }
    buffer[static_cast<std::size_t>(count++)] = run;
    const Parts parts(buffer.data(), static_cast<std::size_t>(count));
    if (!family.contains(parts)) continue;
    ++stats.members;
    ++stats.by_parts[static_cast<std::size_t>(count)];
    ++stats.by_last[static_cast<std::size_t>(run)];
    stats.total_parts += static_cast<std::uint64_t>(count);
    stats.total_last += static_cast<std::uint64_t>(run);
  }
}

BigInt to_big(std::uint64_t v) {
  // mpz_class has no portable uint64 constructor on every platform.
  BigInt out = static_cast<unsigned long>(v >> 32);
  out <<= 32;
  out += static_cast<unsigned long>(v & 0xffffffffULL);
  return out;
}

}  // namespace

CapExceeded::CapExceeded(int n, int max_n)
    : std::length_error("brute-force enumeration refused for n=" +
                        std::to_string(n) + " (cap " + std::to_string(max_n) +
                        "; raise it with --max-n)"),
      n_(n),
      max_n_(max_n) {}

CompositionStream::CompositionStream(int n, FamilySpec family,
                                     EnumerationLimits limits)
    : n_(n), family_(family) {
  check_range(n, limits);
}

CompositionStream::iterator::iterator(int n, FamilySpec family)
    : family_(family), done_(false) {
  if (n > 0) parts_.push_back(n);
  current_ = Composition(parts_);
  skip_to_member();
}

bool CompositionStream::iterator::advance_raw() {
  // Successor in lexicographically decreasing order: lower the last part
  // above 1 and fold everything after it into a single part.
  auto it = std::find_if(parts_.rbegin(), parts_.rend(),
                         [](int p) { return p > 1; });
  if (it == parts_.rend()) return false;
  const auto index = static_cast<std::size_t>(parts_.rend() - it) - 1;
  int tail = 1;
  for (std::size_t j = index + 1; j < parts_.size(); ++j) tail += parts_[j];
  --parts_[index];
  parts_.resize(index + 1);
  parts_.push_back(tail);
  return true;
}

void CompositionStream::iterator::skip_to_member() {
  while (!family_.contains(parts_)) {
    if (!advance_raw()) {
      done_ = true;
      return;
    }
  }
  current_ = Composition(parts_);
}

CompositionStream::iterator& CompositionStream::iterator::operator++() {
  if (done_) return *this;
  if (!advance_raw()) {
    done_ = true;
    return *this;
  }
  skip_to_member();
  return *this;
}

CompositionStream compositions_of(int n, EnumerationLimits limits) {
  return CompositionStream(n, FamilySpec::unrestricted(), limits);
}

CompositionStream members_of(int n, FamilySpec family,
                             EnumerationLimits limits) {
  return CompositionStream(n, family, limits);
}

CompositionStream enumerate_reduced_ap(int n, EnumerationLimits limits) {
  return CompositionStream(n, FamilySpec::reduced_ap(), limits);
}

FamilyStats brute_force_stats(int n, FamilySpec family,
                              EnumerationLimits limits) {
  check_range(n, limits);
  LocalStats merged(n);
  if (n == 0) {
    if (family.contains(Parts{})) {
      merged.members = 1;
      merged.by_parts[0] = 1;
      merged.by_last[0] = 1;
    }
  } else {
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    unsigned workers = limits.threads != 0
                           ? limits.threads
                           : std::max(1U, std::thread::hardware_concurrency());
    if (total < (std::uint64_t{1} << 14)) workers = 1;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<LocalStats>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(total, chunk * w);
      const std::uint64_t last = std::min(total, first + chunk);
      jobs.push_back(std::async(std::launch::async, [=, &family] {
        LocalStats local(n);
        scan_masks(n, family, first, last, local);
        return local;
      }));
    }
    for (auto& job : jobs) {
      const LocalStats local = job.get();
      merged.members += local.members;
      merged.total_parts += local.total_parts;
      merged.total_last += local.total_last;
      for (std::size_t m = 0; m < merged.by_parts.size(); ++m) {
        merged.by_parts[m] += local.by_parts[m];
        merged.by_last[m] += local.by_last[m];
      }
    }
  }

  FamilyStats out;
  out.members = to_big(merged.members);
  out.total_parts = to_big(merged.total_parts);
  out.total_last = to_big(merged.total_last);
  for (std::size_t m = 0; m < merged.by_parts.size(); ++m) {
    out.by_parts.push_back(to_big(merged.by_parts[m]));
    out.by_last.push_back(to_big(merged.by_last[m]));
  }
  out.by_parts = trimmed(std::move(out.by_parts));
  out.by_last = trimmed(std::move(out.by_last));
  return out;
}

std::vector<BigInt> count_by_parts(int n, FamilySpec family,
                                   EnumerationLimits limits) {
  return brute_force_stats(n, family, limits).by_parts;
}

std::vector<BigInt> count_by_last(int n, FamilySpec family,
                                  EnumerationLimits limits) {
  return brute_force_stats(n, family, limits).by_last;
}

BigInt count_members(int n, FamilySpec family, EnumerationLimits limits) {
  return brute_force_stats(n, family, limits).members;
}

BigInt total_parts(int n, EnumerationLimits limits) {
  return brute_force_stats(n, FamilySpec::arndt(), limits).total_parts;
}

BigInt total_last(int n, EnumerationLimits limits) {
  return brute_force_stats(n, FamilySpec::arndt(), limits).total_last;
}

CountTriangle parts_triangle(int max_n, FamilySpec family,
                             EnumerationLimits limits) {
  CountTriangle out;
  for (int n = 0; n <= max_n; ++n) {
    out.append_row(count_by_parts(n, family, limits));
  }
  return out;
}

CountTriangle last_triangle(int max_n, FamilySpec family,
                            EnumerationLimits limits) {
  CountTriangle out;
  for (int n = 0; n <= max_n; ++n) {
    out.append_row(count_by_last(n, family, limits));
  }
  return out;
}

}  // namespace arndt
