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

#include "reference.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "arndt/gf_catalog.h"

#ifndef ARNDT_REFERENCE_DIR
#define ARNDT_REFERENCE_DIR "data/oeis"
#endif

namespace arndt::cli {

std::filesystem::path default_reference_dir() {
  if (const char* env = std::getenv("ARNDT_REFERENCE_DIR"); env && *env) {
    return env;
  }
  return ARNDT_REFERENCE_DIR;
}

std::map<std::string, ReferenceSequence> load_reference_metadata(
    const std::filesystem::path& dir) {
  const auto path = dir / "metadata.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  std::map<std::string, ReferenceSequence> out;
  for (const auto& [name, entry] : doc.items()) {
    ReferenceSequence seq;
    seq.name = name;
    try {
      seq.file = entry.at("reference").get<std::string>();
      seq.first_index = entry.at("first_index").get<long>();
      seq.description = entry.value("description", "");
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path.string() + " entry '" + name +
                               "': " + e.what());
    }
    out.emplace(name, std::move(seq));
  }
  return out;
}

std::vector<IndexedValue> read_bfile(std::istream& in) {
  std::vector<IndexedValue> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::runtime_error("b-file line " + std::to_string(line_number) +
                               ": expected \"index value\", got \"" + line +
                               "\"");
    }
    BigInt parsed;
    if (parsed.set_str(value, 10) != 0) {
      throw std::runtime_error("b-file line " + std::to_string(line_number) +
                               ": bad integer \"" + value + "\"");
    }
    out.emplace_back(index, std::move(parsed));
  }
  return out;
}

std::vector<IndexedValue> read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_bfile(in);
}

std::vector<IndexedValue> compute_sequence(const std::string& name, int max_n,
                                           long first_index,
                                           const CatalogLookup& catalog) {
  if (max_n < 0) throw UsageError("--N must be >= 0");
  std::vector<IndexedValue> out;
  const auto univariate_terms = [&](const RationalGF& f) {
    const auto series = expand(f, max_n, 0);
    for (long n = first_index; n <= max_n; ++n) {
      const auto row = series.integer_row(static_cast<int>(n));
      out.emplace_back(n, row.empty() ? BigInt(0) : row[0]);
    }
    return out;
  };
  if (name == "arndt-total") return univariate_terms(eval_y1(catalog("arndt", 0)));
  if (name == "last-sum") return univariate_terms(catalog("total-last", 0));
  if (name == "parts-triangle-flat") {
    const auto triangle = expand(catalog("arndt", 0), max_n).to_count_triangle();
    long index = first_index;
    for (int n = 1; n <= max_n; ++n) {
      const auto& row = triangle.row(n);
      for (std::size_t m = 1; m < row.size(); ++m) out.emplace_back(index++, row[m]);
    }
    return out;
  }
  throw UsageError("unknown sequence '" + name +
                   "' (expected arndt-total|parts-triangle-flat|last-sum)");
}

ComparisonOutcome compare_to_reference(
    const std::vector<IndexedValue>& computed,
    const std::vector<IndexedValue>& reference) {
  std::map<long, const BigInt*> lookup;
  for (const auto& [index, value] : reference) lookup.emplace(index, &value);
  ComparisonOutcome outcome;
  for (const auto& [index, value] : computed) {
    const auto it = lookup.find(index);
    if (it == lookup.end()) continue;
    ++outcome.compared;
    if (*it->second != value) {
      outcome.mismatch = Mismatch{index, *it->second, value};
      return outcome;
    }
  }
  return outcome;
}

}  // namespace arndt::cli
