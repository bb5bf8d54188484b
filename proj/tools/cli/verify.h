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

#ifndef ARNDT_TOOLS_CLI_VERIFY_H_
#define ARNDT_TOOLS_CLI_VERIFY_H_

#include <functional>
#include <string>
#include <vector>

#include "arndt/enumerator.h"
#include "triangles.h"

namespace arndt::cli {

struct VerifyOptions {
  // "all" or one module name from verify_scopes().
  std::string scope = "all";
  // Upper bound applied to every per-property n range; -1 keeps the defaults
  // (14-22 for brute force, 40 for exact formulas).
  int max_n = -1;
  EnumerationLimits limits;
  CatalogLookup catalog = default_catalog();
};

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample when failed
};

// Module names accepted as a scope, in run order.
const std::vector<std::string>& verify_scopes();

// Runs every property in scope, reporting each result as it completes.
// Throws UsageError for an unknown scope.
std::vector<PropertyResult> run_verification(
    const VerifyOptions& options,
    const std::function<void(const PropertyResult&)>& on_result = {});

}  // namespace arndt::cli

#endif  // ARNDT_TOOLS_CLI_VERIFY_H_
