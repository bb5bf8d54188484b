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

#include "arndt/gf_catalog.h"

#include <stdexcept>

namespace arndt::gf {
namespace {

using Poly = BivariatePolynomial;

const Poly& X() {
  static const Poly x = Poly::x();
  return x;
}
const Poly& Y() {
  static const Poly y = Poly::y();
  return y;
}
Poly xp(unsigned e) { return pow(X(), e); }
Poly yp(unsigned e) { return pow(Y(), e); }

Poly arndt_numerator() {
  const Poly& x = X();
  const Poly& y = Y();
  return 1 - x - xp(2) + xp(3) + x * y - xp(3) * y;
}

Poly fibonacci_kernel() { return 1 - X() - xp(2); }

}  // namespace

RationalGF arndt() {
  return RationalGF(arndt_numerator(), 1 - X() - xp(2) + xp(3) - xp(3) * yp(2));
}

RationalGF antipalindromic() {
  return RationalGF(arndt_numerator(),
                    1 - X() - xp(2) + xp(3) - 2 * xp(3) * yp(2));
}

RationalGF reduced_ap() {
  return RationalGF(arndt_numerator(), 1 - X() - xp(2) + xp(3) - xp(3) * yp(2));
}

RationalGF last_part() {
  const Poly& x = X();
  const Poly& y = Y();
  Poly numerator = 1 - x - xp(2) - xp(2) * y + 2 * xp(3) * y +
                   2 * xp(4) * y - xp(5) * y - xp(4) * yp(2);
  Poly denominator = fibonacci_kernel() * (1 - x * y) * (1 - xp(2) * y);
  return RationalGF(std::move(numerator), std::move(denominator));
}

RationalGF total_parts() {
  const Poly& x = X();
  return RationalGF(x * (1 - x + xp(3) - xp(4)), pow(fibonacci_kernel(), 2));
}

RationalGF total_last() {
  const Poly& x = X();
  return RationalGF(x * (1 + x - xp(3)),
                    1 - x - 2 * xp(2) + xp(3) + xp(4));
}

RationalGF fibonacci() { return RationalGF(X(), fibonacci_kernel()); }

RationalGF k_arndt(int k) {
  const Poly& x = X();
  const Poly& y = Y();
  Poly numerator = (1 - xp(2)) * (1 - x * (1 - y));
  if (k >= 0) {
    return RationalGF(std::move(numerator),
                      1 - x - xp(2) + xp(3) -
                          xp(static_cast<unsigned>(3 + k)) * yp(2));
  }
  return RationalGF(std::move(numerator),
                    1 - x - xp(2) * (1 + yp(2)) + xp(3) * (1 - yp(2)) +
                        yp(2) * xp(static_cast<unsigned>(2 - k)));
}

RationalGF distinct_parts(int j) {
  if (j < 0) {
    throw std::invalid_argument("distinct-parts count must be >= 0");
  }
  Poly denominator = 1;
  for (int l = 1; l <= j; ++l) {
    denominator *= 1 - xp(static_cast<unsigned>(l));
  }
  const auto uj = static_cast<unsigned>(j);
  return RationalGF(xp(uj * (uj + 1) / 2) * yp(uj), std::move(denominator));
}

RationalGF k_block(int k) {
  if (k < 1) throw std::invalid_argument("block size must be >= 1");
  RationalGF head = distinct_parts(0);
  for (int j = 1; j < k; ++j) head = rational_add(head, distinct_parts(j));
  const RationalGF tail = rational_sub(RationalGF(1), distinct_parts(k));
  return rational_div(head, tail);
}

RationalGF k_block3_closed_form() {
  const Poly& x = X();
  const Poly& y = Y();
  return RationalGF(
      (1 - xp(3)) * (1 - x - xp(2) + xp(3) + x * y - xp(3) * y + xp(3) * yp(2)),
      1 - x - xp(2) + xp(4) + xp(5) - xp(6) * (1 + yp(3)));
}

RationalGF k_block4_closed_form() {
  const Poly& x = X();
  const Poly& y = Y();
  return RationalGF(
      (1 - xp(4)) * (1 - x - xp(2) + xp(4) + xp(5) - xp(6) + x * y -
                     xp(3) * y - xp(4) * y + xp(6) * y + xp(3) * yp(2) -
                     xp(6) * yp(2) + xp(6) * yp(3)),
      1 - x - xp(2) + 2 * xp(5) - xp(8) - xp(9) + xp(10) - xp(10) * yp(4));
}

RationalGF k_arndt_total(int k) {
  const Poly& x = X();
  if (k >= 0) {
    return RationalGF(1 - xp(2), 1 - x - xp(2) + xp(3) -
                                     xp(static_cast<unsigned>(k + 3)));
  }
  return RationalGF(1 - xp(2),
                    1 - x - 2 * xp(2) + xp(static_cast<unsigned>(2 - k)));
}

RationalGF k_block3_total_closed_form() {
  const Poly& x = X();
  return RationalGF(1 - xp(2) + xp(5) - xp(6),
                    1 - x - xp(2) + xp(4) + xp(5) - 2 * xp(6));
}

RationalGF k_block4_total_closed_form() {
  const Poly& x = X();
  return RationalGF((1 - x) * (1 + x) * (1 + xp(2)) * (1 - xp(2) + xp(5)),
                    1 - x - xp(2) + 2 * xp(5) - xp(8) - xp(9));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"arndt", false, "Arndt compositions by weight and parts"},
      {"antipalindromic", false,
       "anti-palindromic compositions by weight and parts"},
      {"reduced-ap", false,
       "reduced anti-palindromic compositions by weight and parts"},
      {"last-part", false, "Arndt compositions by weight and last part"},
      {"total-parts", false, "p(n): parts summed over Arndt compositions"},
      {"total-last", false, "d(n): last parts summed over Arndt compositions"},
      {"fibonacci", false, "x/(1-x-x^2)"},
      {"k-arndt", true, "k-Arndt compositions by weight and parts"},
      {"distinct-parts", true, "partitions into exactly k distinct parts"},
      {"block-arndt", true, "k-block Arndt compositions by weight and parts"},
  };
  return entries;
}

RationalGF by_name(const std::string& name, int k) {
  if (name == "arndt") return arndt();
  if (name == "antipalindromic") return antipalindromic();
  if (name == "reduced-ap") return reduced_ap();
  if (name == "last-part") return last_part();
  if (name == "total-parts") return total_parts();
  if (name == "total-last") return total_last();
  if (name == "fibonacci") return fibonacci();
  if (name == "k-arndt") return k_arndt(k);
  if (name == "distinct-parts") return distinct_parts(k);
  if (name == "block-arndt") return k_block(k);
  throw std::invalid_argument("unknown generating function '" + name + "'");
}

}  // namespace arndt::gf
