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

#include "arndt/composition.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace arndt {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be >= 1, got " +
                                  std::to_string(p));
    }
    weight_ += p;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

int Composition::last() const {
  if (parts_.empty()) {
    throw std::domain_error("last part of the empty composition");
  }
  return parts_.back();
}

std::string Composition::to_string() const { return arndt::to_string(parts_); }

std::string to_string(Parts parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ')';
  return out;
}

FamilySpec FamilySpec::k_block_arndt(int k) {
  if (k < 1) {
    throw std::invalid_argument("block-arndt family requires k >= 1, got " +
                                std::to_string(k));
  }
  return FamilySpec(Kind::kKBlockArndt, k);
}

bool FamilySpec::contains(Parts parts) const {
  switch (kind_) {
    case Kind::kArndt:
      return is_arndt(parts);
    case Kind::kKArndt:
      return is_k_arndt(parts, k_);
    case Kind::kKBlockArndt:
      return is_k_block_arndt(parts, k_);
    case Kind::kAntiPalindromic:
      return is_antipalindromic(parts);
    case Kind::kReducedApRepresentative:
      return is_reduced_ap_representative(parts);
    case Kind::kUnrestricted:
      return true;
  }
  return false;
}

std::string FamilySpec::name() const {
  switch (kind_) {
    case Kind::kArndt:
      return "arndt";
    case Kind::kKArndt:
      return "k-arndt(k=" + std::to_string(k_) + ")";
    case Kind::kKBlockArndt:
      return "block-arndt(k=" + std::to_string(k_) + ")";
    case Kind::kAntiPalindromic:
      return "antipalindromic";
    case Kind::kReducedApRepresentative:
      return "reduced-ap";
    case Kind::kUnrestricted:
      return "all";
  }
  return "?";
}

bool is_arndt(Parts parts) { return is_k_arndt(parts, 0); }

bool is_k_arndt(Parts parts, int k) {
  for (std::size_t i = 1; i < parts.size(); i += 2) {
    // Widened so extreme k cannot overflow.
    if (static_cast<std::int64_t>(parts[i - 1]) <=
        static_cast<std::int64_t>(parts[i]) + k) {
      return false;
    }
  }
  return true;
}

bool is_k_block_arndt(Parts parts, int k) {
  if (k < 1) {
    throw std::invalid_argument("block size must be >= 1, got " +
                                std::to_string(k));
  }
  const auto block = static_cast<std::size_t>(k);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (i % block != 0 && parts[i - 1] <= parts[i]) return false;
  }
  return true;
}

bool is_antipalindromic(Parts parts) {
  const std::size_t n = parts.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (parts[i] == parts[n - 1 - i]) return false;
  }
  return true;
}

bool is_reduced_ap_representative(Parts parts) {
  const std::size_t n = parts.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (parts[i] <= parts[n - 1 - i]) return false;
  }
  return true;
}

std::vector<Composition> flip_class(const Composition& c) {
  if (!is_antipalindromic(c)) {
    throw std::domain_error("flip_class needs an anti-palindromic input, got " +
                            c.to_string());
  }
  const Parts base = c.parts();
  const std::size_t n = base.size();
  const std::size_t pairs = n / 2;
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<int> parts(base.begin(), base.end());
    for (std::size_t i = 0; i < pairs; ++i) {
      if ((mask >> i) & 1U) std::swap(parts[i], parts[n - 1 - i]);
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arndt
