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

#ifndef ARNDT_TOOLS_CLI_OUTPUT_H_
#define ARNDT_TOOLS_CLI_OUTPUT_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "arndt/composition.h"
#include "arndt/count_triangle.h"
#include "arndt/power_series.h"

namespace arndt::cli {

enum class OutputFormat { kPlain, kCsv, kJsonLines, kBfile };

// "plain", "csv", "jsonl" (or "json-lines"), "bfile".
OutputFormat parse_format(const std::string& name);

// One composition per line: "(2,1,2,1)", "2,1,2,1" or
// {"n":6,"parts":[2,1,2,1]}.
void write_composition(std::ostream& out, const Composition& c,
                       OutputFormat format);

// Rows 0..num_rows()-1, each through its last nonzero column.
//   plain:  aligned grid under a "n\m 0 1 2 ..." header
//   csv:    n,c0,c1,...
//   jsonl:  {"n":6,"row":[0,1,2,4,1]}
// bfile is rejected: a triangle is not a univariate sequence.
void write_triangle(std::ostream& out, const CountTriangle& triangle,
                    OutputFormat format);

// Rows 0..order(). plain prints line n as the y-polynomial multiplying x^n,
// ascending in y ("y + 3*y^2 + 3*y^3 + y^4"; the constant row prints "1").
// csv/jsonl print dense rows as in write_triangle. bfile is accepted only
// when no coefficient involves y.
void write_series(std::ostream& out, const TruncatedSeries& series,
                  OutputFormat format);

using IndexedValue = std::pair<long, BigInt>;

// "index value" lines.
void write_bfile(std::ostream& out, const std::vector<IndexedValue>& terms);

}  // namespace arndt::cli

#endif  // ARNDT_TOOLS_CLI_OUTPUT_H_
