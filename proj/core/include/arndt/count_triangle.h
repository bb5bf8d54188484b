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

#ifndef ARNDT_COUNT_TRIANGLE_H_
#define ARNDT_COUNT_TRIANGLE_H_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arndt {

using BigInt = mpz_class;
using Rational = mpq_class;

// A sequence n -> value, indexed from 0.
using StatVector = std::vector<BigInt>;

// Exact counts indexed by (n, m). Rows 0..num_rows()-1 exist; entries past
// the stored width of a row read as zero. Reading a row that was never added
// is an error, which is how callers detect an undersized table.
class CountTriangle {
 public:
  CountTriangle() = default;
  explicit CountTriangle(int num_rows);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool has_row(int n) const { return n >= 0 && n < num_rows(); }

  // Zero for m outside the stored row. Throws std::out_of_range when row n is
  // missing.
  BigInt at(int n, int m) const;
  // Like at() but zero for missing rows as well.
  BigInt get(int n, int m) const;

  void set(int n, int m, const BigInt& value);
  void add(int n, int m, const BigInt& value);
  void append_row(std::vector<BigInt> row);

  // Trailing zeros are trimmed, so row(n).size() - 1 is the last nonzero
  // column (or the row is empty).
  const std::vector<BigInt>& row(int n) const;
  BigInt row_sum(int n) const;

  friend bool operator==(const CountTriangle&, const CountTriangle&) = default;

 private:
  void trim(int n);
  std::vector<std::vector<BigInt>> rows_;
};

std::vector<BigInt> trimmed(std::vector<BigInt> row);

}  // namespace arndt

#endif  // ARNDT_COUNT_TRIANGLE_H_
