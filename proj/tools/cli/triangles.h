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

#ifndef ARNDT_TOOLS_CLI_TRIANGLES_H_
#define ARNDT_TOOLS_CLI_TRIANGLES_H_

#include <functional>
#include <stdexcept>
#include <string>

#include "arndt/composition.h"
#include "arndt/count_triangle.h"
#include "arndt/enumerator.h"
#include "arndt/power_series.h"

namespace arndt::cli {

// Bad flag values or unsupported combinations; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Statistic { kParts, kLast };
enum class Method { kGeneratingFunction, kBruteForce, kFormula };

Statistic parse_statistic(const std::string& name);
Method parse_method(const std::string& name);
// --family/--k to a FamilySpec. "all" is the unrestricted family.
FamilySpec parse_family(const std::string& name, int k, bool k_given);

// Catalog lookup used by the gf method; swappable so verification can run
// against a modified catalog.
using CatalogLookup = std::function<RationalGF(const std::string&, int)>;
CatalogLookup default_catalog();

// Catalog entry that counts `family` by `statistic`; throws UsageError when
// there is none.
RationalGF family_gf(Statistic statistic, const FamilySpec& family,
                     const CatalogLookup& catalog);

// Rows 0..max_n computed by the chosen path. All three paths produce
// trimmed rows, so equal counts give equal triangles.
CountTriangle compute_triangle(Statistic statistic, const FamilySpec& family,
                               Method method, int max_n,
                               const EnumerationLimits& limits,
                               const CatalogLookup& catalog);

}  // namespace arndt::cli

#endif  // ARNDT_TOOLS_CLI_TRIANGLES_H_
