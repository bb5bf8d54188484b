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

#include "triangles.h"

#include "arndt/closed_forms.h"
#include "arndt/gf_catalog.h"

namespace arndt::cli {

Statistic parse_statistic(const std::string& name) {
  if (name == "parts") return Statistic::kParts;
  if (name == "last") return Statistic::kLast;
  throw UsageError("unknown table kind '" + name + "' (expected parts|last)");
}

Method parse_method(const std::string& name) {
  if (name == "gf") return Method::kGeneratingFunction;
  if (name == "brute") return Method::kBruteForce;
  if (name == "formula") return Method::kFormula;
  throw UsageError("unknown method '" + name + "' (expected gf|brute|formula)");
}

FamilySpec parse_family(const std::string& name, int k, bool k_given) {
  const bool needs_k = name == "k-arndt" || name == "block-arndt";
  if (needs_k && !k_given) {
    throw UsageError("--family " + name + " requires --k");
  }
  if (name == "arndt") return FamilySpec::arndt();
  if (name == "k-arndt") return FamilySpec::k_arndt(k);
  if (name == "block-arndt") {
    if (k < 1) throw UsageError("--family block-arndt requires --k >= 1");
    return FamilySpec::k_block_arndt(k);
  }
  if (name == "antipalindromic") return FamilySpec::antipalindromic();
  if (name == "reduced-ap") return FamilySpec::reduced_ap();
  if (name == "all") return FamilySpec::unrestricted();
  throw UsageError("unknown family '" + name + "'");
}

CatalogLookup default_catalog() {
  return [](const std::string& name, int k) { return gf::by_name(name, k); };
}

RationalGF family_gf(Statistic statistic, const FamilySpec& family,
                     const CatalogLookup& catalog) {
  using Kind = FamilySpec::Kind;
  if (statistic == Statistic::kLast) {
    if (family.kind() == Kind::kArndt) return catalog("last-part", 0);
    throw UsageError("no last-part generating function for family " +
                     family.name() + "; use --method brute");
  }
  switch (family.kind()) {
    case Kind::kArndt:
      return catalog("arndt", 0);
    case Kind::kKArndt:
      return catalog("k-arndt", family.k());
    case Kind::kKBlockArndt:
      return catalog("block-arndt", family.k());
    case Kind::kAntiPalindromic:
      return catalog("antipalindromic", 0);
    case Kind::kReducedApRepresentative:
      return catalog("reduced-ap", 0);
    case Kind::kUnrestricted:
      // Blocks of one part impose nothing.
      return catalog("block-arndt", 1);
  }
  throw UsageError("unsupported family");
}

namespace {

BigInt parts_formula(const FamilySpec& family, int n, int m) {
  using Kind = FamilySpec::Kind;
  switch (family.kind()) {
    case Kind::kArndt:
    case Kind::kReducedApRepresentative:
      return a_sum_alternating(n, m);
    case Kind::kAntiPalindromic: {
      BigInt scale = 1;
      scale <<= static_cast<mp_bitcnt_t>(m / 2);
      return scale * a_sum_alternating(n, m);
    }
    case Kind::kUnrestricted:
      if (n == 0) return m == 0 ? 1 : 0;
      return gen_binomial(n - 1, m - 1);
    default:
      throw UsageError("no closed formula for family " + family.name() +
                       "; use --method gf or brute");
  }
}

}  // namespace

CountTriangle compute_triangle(Statistic statistic, const FamilySpec& family,
                               Method method, int max_n,
                               const EnumerationLimits& limits,
                               const CatalogLookup& catalog) {
  if (max_n < 0) throw UsageError("--N must be >= 0");
  switch (method) {
    case Method::kBruteForce:
      return statistic == Statistic::kParts
                 ? parts_triangle(max_n, family, limits)
                 : last_triangle(max_n, family, limits);
    case Method::kGeneratingFunction:
      return expand(family_gf(statistic, family, catalog), max_n)
          .to_count_triangle();
    case Method::kFormula: {
      if (statistic == Statistic::kLast &&
          family.kind() != FamilySpec::Kind::kArndt) {
        throw UsageError("no closed formula for last parts of family " +
                         family.name());
      }
      CountTriangle out(max_n + 1);
      for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
          out.set(n, m,
                  statistic == Statistic::kParts ? parts_formula(family, n, m)
                                                 : b_closed(n, m));
        }
      }
      return out;
    }
  }
  throw UsageError("unsupported method");
}

}  // namespace arndt::cli
