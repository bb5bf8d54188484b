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

#ifndef ARNDT_TOOLS_CLI_REFERENCE_H_
#define ARNDT_TOOLS_CLI_REFERENCE_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "output.h"
#include "triangles.h"

namespace arndt::cli {

// One entry of metadata.json in the reference directory.
struct ReferenceSequence {
  std::string name;         // CLI name, e.g. "last-sum"
  std::string file;         // b-file name relative to the directory
  long first_index = 1;     // first index the CLI emits
  std::string description;
};

// $ARNDT_REFERENCE_DIR if set, otherwise the directory baked in at build
// time.
std::filesystem::path default_reference_dir();

// Throws std::runtime_error if metadata.json is missing or malformed.
std::map<std::string, ReferenceSequence> load_reference_metadata(
    const std::filesystem::path& dir);

// Parses "index value" lines; blank lines and lines starting with '#' are
// skipped. Throws std::runtime_error on anything else.
std::vector<IndexedValue> read_bfile(std::istream& in);
std::vector<IndexedValue> read_bfile(const std::filesystem::path& path);

// Terms of a named sequence with data indices first_index..max_n (for the
// flattened triangle: rows first_index..max_n, running index from
// first_index). Throws UsageError for unknown names.
std::vector<IndexedValue> compute_sequence(const std::string& name, int max_n,
                                           long first_index,
                                           const CatalogLookup& catalog);

struct Mismatch {
  long index;
  BigInt expected;
  BigInt actual;
};

struct ComparisonOutcome {
  std::optional<Mismatch> mismatch;
  std::size_t compared = 0;
};

// Compares every computed index that the reference covers; indices past the
// reference prefix are not compared.
ComparisonOutcome compare_to_reference(
    const std::vector<IndexedValue>& computed,
    const std::vector<IndexedValue>& reference);

}  // namespace arndt::cli

#endif  // ARNDT_TOOLS_CLI_REFERENCE_H_
