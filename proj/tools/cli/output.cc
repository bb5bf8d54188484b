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

#include "output.h"

#include <algorithm>
#include <iomanip>

#include "triangles.h"

namespace arndt::cli {
namespace {

std::string number_text(const Rational& value, bool quote_fractions) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return quote_fractions ? "\"" + value.get_str() + "\"" : value.get_str();
}

template <typename Row, typename Text>
void write_dense_row(std::ostream& out, int n, const Row& row,
                     OutputFormat format, Text text) {
  if (format == OutputFormat::kCsv) {
    out << n;
    for (const auto& v : row) out << ',' << text(v, false);
    out << '\n';
    return;
  }
  out << "{\"n\":" << n << ",\"row\":[";
  for (std::size_t m = 0; m < row.size(); ++m) {
    if (m != 0) out << ',';
    out << text(row[m], true);
  }
  out << "]}\n";
}

std::string y_polynomial(const std::vector<Rational>& row) {
  std::string out;
  for (std::size_t m = 0; m < row.size(); ++m) {
    const Rational& c = row[m];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string power =
        m == 0 ? "" : (m == 1 ? "y" : "y^" + std::to_string(m));
    if (power.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.get_str() + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::kPlain;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl" || name == "json-lines") return OutputFormat::kJsonLines;
  if (name == "bfile") return OutputFormat::kBfile;
  throw UsageError("unknown format '" + name +
                   "' (expected plain|csv|jsonl|bfile)");
}

void write_composition(std::ostream& out, const Composition& c,
                       OutputFormat format) {
  switch (format) {
    case OutputFormat::kPlain:
      out << c.to_string() << '\n';
      return;
    case OutputFormat::kCsv: {
      const auto parts = c.parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out << ',';
        out << parts[i];
      }
      out << '\n';
      return;
    }
    case OutputFormat::kJsonLines: {
      out << "{\"n\":" << c.weight() << ",\"parts\":[";
      const auto parts = c.parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out << ',';
        out << parts[i];
      }
      out << "]}\n";
      return;
    }
    case OutputFormat::kBfile:
      throw UsageError("bfile format applies only to univariate sequences");
  }
}

void write_triangle(std::ostream& out, const CountTriangle& triangle,
                    OutputFormat format) {
  const auto text = [](const BigInt& v, bool) { return v.get_str(); };
  if (format == OutputFormat::kBfile) {
    throw UsageError("bfile format applies only to univariate sequences");
  }
  if (format != OutputFormat::kPlain) {
    for (int n = 0; n < triangle.num_rows(); ++n) {
      write_dense_row(out, n, triangle.row(n), format, text);
    }
    return;
  }

  std::size_t columns = 0;
  for (int n = 0; n < triangle.num_rows(); ++n) {
    columns = std::max(columns, triangle.row(n).size());
  }
  const std::string corner = "n\\m";
  std::size_t index_width =
      std::max(corner.size(), std::to_string(triangle.num_rows() - 1).size());
  std::vector<std::size_t> widths(columns);
  for (std::size_t m = 0; m < columns; ++m) {
    widths[m] = std::to_string(m).size();
    for (int n = 0; n < triangle.num_rows(); ++n) {
      const auto& row = triangle.row(n);
      if (m < row.size()) widths[m] = std::max(widths[m], row[m].get_str().size());
    }
  }
  out << std::left << std::setw(static_cast<int>(index_width)) << corner
      << std::right;
  for (std::size_t m = 0; m < columns; ++m) {
    out << ' ' << std::setw(static_cast<int>(widths[m])) << m;
  }
  out << '\n';
  for (int n = 0; n < triangle.num_rows(); ++n) {
    out << std::left << std::setw(static_cast<int>(index_width)) << n
        << std::right;
    const auto& row = triangle.row(n);
    for (std::size_t m = 0; m < row.size(); ++m) {
      out << ' ' << std::setw(static_cast<int>(widths[m])) << row[m].get_str();
    }
    out << '\n';
  }
}

void write_series(std::ostream& out, const TruncatedSeries& series,
                  OutputFormat format) {
  switch (format) {
    case OutputFormat::kPlain:
      for (int n = 0; n <= series.order(); ++n) {
        out << y_polynomial(series.row(n)) << '\n';
      }
      return;
    case OutputFormat::kCsv:
    case OutputFormat::kJsonLines:
      for (int n = 0; n <= series.order(); ++n) {
        const auto& full = series.row(n);
        const int degree = series.row_degree(n);
        const std::vector<Rational> row(full.begin(), full.begin() + (degree + 1));
        write_dense_row(out, n, row, format, number_text);
      }
      return;
    case OutputFormat::kBfile: {
      std::vector<IndexedValue> terms;
      for (int n = 0; n <= series.order(); ++n) {
        if (series.row_degree(n) > 0) {
          throw UsageError(
              "bfile format applies only to univariate sequences; this series "
              "depends on y");
        }
        const Rational& c = series.coefficient(n, 0);
        if (c.get_den() != 1) {
          throw UsageError("bfile format needs integer coefficients");
        }
        terms.emplace_back(n, c.get_num());
      }
      write_bfile(out, terms);
      return;
    }
  }
}

void write_bfile(std::ostream& out, const std::vector<IndexedValue>& terms) {
  for (const auto& [index, value] : terms) {
    out << index << ' ' << value.get_str() << '\n';
  }
}

}  // namespace arndt::cli
