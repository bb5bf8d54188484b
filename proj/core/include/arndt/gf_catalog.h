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

#ifndef ARNDT_GF_CATALOG_H_
#define ARNDT_GF_CATALOG_H_

#include <string>
#include <vector>

#include "arndt/power_series.h"

// Generating functions for the composition families, x marking weight and y
// marking the statistic named in each constructor. The polynomials are the
// known closed forms, hard-coded; nothing here re-derives them.
namespace arndt::gf {

// Arndt compositions by weight and number of parts:
//   (1 - x - x^2 + x^3 + xy - x^3 y) / (1 - x - x^2 + x^3 - x^3 y^2).
RationalGF arndt();

// Anti-palindromic compositions by weight and number of parts. Each mirrored
// pair contributes twice the Arndt pair kernel, hence the 2 x^3 y^2.
RationalGF antipalindromic();

// Flip classes of anti-palindromic compositions by weight and parts.
// Identical to arndt() as a polynomial pair.
RationalGF reduced_ap();

// Arndt compositions by weight and last part, denominator expanded from
// (1 - x - x^2)(1 - xy)(1 - x^2 y).
RationalGF last_part();

// p(n), total parts over A(n): x(1 - x + x^3 - x^4) / (1 - x - x^2)^2.
RationalGF total_parts();
// d(n), total of last parts over A(n): x(1 + x - x^3)/(1 - x - 2x^2 + x^3 + x^4).
RationalGF total_last();

// x / (1 - x - x^2).
RationalGF fibonacci();

// k-Arndt compositions (pairs must drop by more than k) by weight and parts.
// The denominator takes a different shape for negative k.
RationalGF k_arndt(int k);

// Partitions into exactly j distinct parts, y marking j:
//   x^(j(j+1)/2) y^j / prod_{l=1..j} (1 - x^l); J_0 = 1.
// Throws std::invalid_argument for j < 0.
RationalGF distinct_parts(int j);

// k-block Arndt compositions: (sum_{j<k} J_j) / (1 - J_k). Assembled with
// rational arithmetic, so the pair is not reduced. Throws
// std::invalid_argument for k < 1.
RationalGF k_block(int k);

// Reduced closed forms of k_block(3) and k_block(4), hard-coded so they can be
// checked against the assembled k_block() quotient.
RationalGF k_block3_closed_form();
RationalGF k_block4_closed_form();

// Univariate totals for the generalized families at y = 1.
RationalGF k_arndt_total(int k);
RationalGF k_block3_total_closed_form();
RationalGF k_block4_total_closed_form();

// Catalog lookup by CLI name. Names taking a parameter read `k`.
struct CatalogEntry {
  std::string name;
  bool takes_k;
  std::string description;
};
const std::vector<CatalogEntry>& catalog_entries();
// Throws std::invalid_argument for unknown names or invalid k.
RationalGF by_name(const std::string& name, int k = 0);

}  // namespace arndt::gf

#endif  // ARNDT_GF_CATALOG_H_
