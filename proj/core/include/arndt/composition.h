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

#ifndef ARNDT_COMPOSITION_H_
#define ARNDT_COMPOSITION_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace arndt {

// Read-only view over the parts of a composition. Predicates take this so the
// enumerator can test its scratch buffer without materializing a Composition.
using Parts = std::span<const int>;

// An ordered sequence of positive integers. The empty composition is valid and
// has weight 0. Immutable after construction.
class Composition {
 public:
  Composition() = default;
  // Throws std::invalid_argument if any part is < 1.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  Parts parts() const { return parts_; }
  std::int64_t weight() const { return weight_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  // Throws std::domain_error on the empty composition.
  int last() const;

  // "(2,1,2,1)"; the empty composition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::int64_t weight_ = 0;
};

std::string to_string(Parts parts);

// The composition families studied here. kArndt accepts any integer k;
// kBlockArndt requires k >= 1.
class FamilySpec {
 public:
  enum class Kind {
    kArndt,
    kKArndt,
    kKBlockArndt,
    kAntiPalindromic,
    kReducedApRepresentative,
    kUnrestricted,
  };

  static FamilySpec arndt() { return FamilySpec(Kind::kArndt, 0); }
  static FamilySpec k_arndt(int k) { return FamilySpec(Kind::kKArndt, k); }
  // Throws std::invalid_argument if k < 1.
  static FamilySpec k_block_arndt(int k);
  static FamilySpec antipalindromic() {
    return FamilySpec(Kind::kAntiPalindromic, 0);
  }
  static FamilySpec reduced_ap() {
    return FamilySpec(Kind::kReducedApRepresentative, 0);
  }
  static FamilySpec unrestricted() {
    return FamilySpec(Kind::kUnrestricted, 0);
  }

  Kind kind() const { return kind_; }
  int k() const { return k_; }

  bool contains(Parts parts) const;
  bool contains(const Composition& c) const { return contains(c.parts()); }

  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(Kind kind, int k) : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

// sigma_{2i-1} > sigma_{2i} for every complete pair; a trailing unpaired part
// is unconstrained.
bool is_arndt(Parts parts);
inline bool is_arndt(const Composition& c) { return is_arndt(c.parts()); }

// sigma_{2i-1} > sigma_{2i} + k for every complete pair. k may be negative.
bool is_k_arndt(Parts parts, int k);
inline bool is_k_arndt(const Composition& c, int k) {
  return is_k_arndt(c.parts(), k);
}

// Every block of k consecutive parts, including a trailing partial block, is
// strictly decreasing. Throws std::invalid_argument if k < 1.
bool is_k_block_arndt(Parts parts, int k);
inline bool is_k_block_arndt(const Composition& c, int k) {
  return is_k_block_arndt(c.parts(), k);
}

// sigma_i != sigma_{l+1-i} for every mirrored pair; the middle index of an
// odd-length composition is exempt.
bool is_antipalindromic(Parts parts);
inline bool is_antipalindromic(const Composition& c) {
  return is_antipalindromic(c.parts());
}

// Canonical member of a flip class: sigma_i > sigma_{l+1-i} for every mirrored
// pair with i < (l+1)/2.
bool is_reduced_ap_representative(Parts parts);
inline bool is_reduced_ap_representative(const Composition& c) {
  return is_reduced_ap_representative(c.parts());
}

// All compositions reachable by swapping any subset of mirrored pairs, sorted
// ascending. Size is 2^floor(l/2). Throws std::domain_error unless the input
// is anti-palindromic.
std::vector<Composition> flip_class(const Composition& c);

}  // namespace arndt

#endif  // ARNDT_COMPOSITION_H_
