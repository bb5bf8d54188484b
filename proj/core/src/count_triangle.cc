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

#include "arndt/count_triangle.h"

#include <stdexcept>
#include <utility>

namespace arndt {

CountTriangle::CountTriangle(int num_rows)
    : rows_(static_cast<std::size_t>(num_rows < 0 ? 0 : num_rows)) {}

BigInt CountTriangle::at(int n, int m) const {
  if (!has_row(n)) {
    throw std::out_of_range("count triangle has no row " + std::to_string(n) +
                            " (rows 0.." + std::to_string(num_rows() - 1) +
                            ")");
  }
  const auto& r = rows_[static_cast<std::size_t>(n)];
  if (m < 0 || static_cast<std::size_t>(m) >= r.size()) return 0;
  return r[static_cast<std::size_t>(m)];
}

BigInt CountTriangle::get(int n, int m) const {
  return has_row(n) ? at(n, m) : BigInt(0);
}

void CountTriangle::set(int n, int m, const BigInt& value) {
  if (n < 0 || m < 0) throw std::out_of_range("negative triangle index");
  if (n >= num_rows()) rows_.resize(static_cast<std::size_t>(n) + 1);
  auto& r = rows_[static_cast<std::size_t>(n)];
  if (static_cast<std::size_t>(m) >= r.size()) {
    if (value == 0) return;
    r.resize(static_cast<std::size_t>(m) + 1);
  }
  r[static_cast<std::size_t>(m)] = value;
  trim(n);
}

void CountTriangle::add(int n, int m, const BigInt& value) {
  set(n, m, get(n, m) + value);
}

void CountTriangle::append_row(std::vector<BigInt> row) {
  rows_.push_back(trimmed(std::move(row)));
}

const std::vector<BigInt>& CountTriangle::row(int n) const {
  if (!has_row(n)) {
    throw std::out_of_range("count triangle has no row " + std::to_string(n));
  }
  return rows_[static_cast<std::size_t>(n)];
}

BigInt CountTriangle::row_sum(int n) const {
  BigInt total = 0;
  for (const auto& v : row(n)) total += v;
  return total;
}

void CountTriangle::trim(int n) {
  auto& r = rows_[static_cast<std::size_t>(n)];
  while (!r.empty() && r.back() == 0) r.pop_back();
}

std::vector<BigInt> trimmed(std::vector<BigInt> row) {
  while (!row.empty() && row.back() == 0) row.pop_back();
  return row;
}

}  // namespace arndt
