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

#include "arndt/power_series.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace arndt {
namespace {

using Row = std::vector<Rational>;

// Sparse y-polynomial: (degree, coefficient) pairs.
using SparseRow = std::vector<std::pair<int, Rational>>;

// rows[i] holds the y-polynomial multiplying x^i, truncated at max_y.
std::vector<SparseRow> split_by_x(const BivariatePolynomial& p, int max_y) {
  std::vector<SparseRow> rows(static_cast<std::size_t>(p.degree_x() + 1));
  for (const auto& [m, c] : p.terms()) {
    if (m.y <= max_y) rows[static_cast<std::size_t>(m.x)].emplace_back(m.y, c);
  }
  return rows;
}

void multiply_accumulate(const SparseRow& a, const Row& b, Row& out,
                         const Rational& sign) {
  const int max_y = static_cast<int>(out.size()) - 1;
  for (const auto& [da, ca] : a) {
    const Rational scaled = sign * ca;
    for (int db = 0; db + da <= max_y; ++db) {
      const auto& cb = b[static_cast<std::size_t>(db)];
      if (cb != 0) out[static_cast<std::size_t>(da + db)] += scaled * cb;
    }
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order_x, int order_y)
    : order_x_(order_x), order_y_(order_y) {
  if (order_x < 0 || order_y < 0) {
    throw std::invalid_argument("series orders must be >= 0");
  }
  rows_.assign(static_cast<std::size_t>(order_x) + 1,
               Row(static_cast<std::size_t>(order_y) + 1));
}

const Rational& TruncatedSeries::coefficient(int n, int m) const {
  static const Rational kZero = 0;
  const auto& r = row(n);
  if (m < 0 || m > order_y_) return kZero;
  return r[static_cast<std::size_t>(m)];
}

void TruncatedSeries::set(int n, int m, Rational value) {
  if (n < 0 || n > order_x_ || m < 0 || m > order_y_) {
    throw std::out_of_range("series index outside truncation");
  }
  value.canonicalize();
  rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
      std::move(value);
}

const std::vector<Rational>& TruncatedSeries::row(int n) const {
  if (n < 0 || n > order_x_) {
    throw std::out_of_range("series row " + std::to_string(n) +
                            " outside truncation order " +
                            std::to_string(order_x_));
  }
  return rows_[static_cast<std::size_t>(n)];
}

int TruncatedSeries::row_degree(int n) const {
  const auto& r = row(n);
  for (int m = order_y_; m >= 0; --m) {
    if (r[static_cast<std::size_t>(m)] != 0) return m;
  }
  return -1;
}

std::vector<BigInt> TruncatedSeries::integer_row(int n) const {
  const auto& r = row(n);
  std::vector<BigInt> out;
  out.reserve(r.size());
  for (std::size_t m = 0; m < r.size(); ++m) {
    if (r[m].get_den() != 1) {
      throw std::domain_error("coefficient [x^" + std::to_string(n) + " y^" +
                              std::to_string(m) + "] = " + r[m].get_str() +
                              " is not an integer");
    }
    out.push_back(r[m].get_num());
  }
  return trimmed(std::move(out));
}

bool TruncatedSeries::all_nonnegative_integers() const {
  for (const auto& r : rows_) {
    for (const auto& c : r) {
      if (c < 0 || c.get_den() != 1) return false;
    }
  }
  return true;
}

bool TruncatedSeries::statistic_bounded_by_weight() const {
  for (int n = 0; n <= order_x_; ++n) {
    if (row_degree(n) > n) return false;
  }
  return true;
}

CountTriangle TruncatedSeries::to_count_triangle() const {
  CountTriangle out;
  for (int n = 0; n <= order_x_; ++n) {
    auto r = integer_row(n);
    for (const auto& v : r) {
      if (v < 0) {
        throw std::domain_error("negative coefficient in row " +
                                std::to_string(n));
      }
    }
    out.append_row(std::move(r));
  }
  return out;
}

std::vector<Rational> TruncatedSeries::univariate() const {
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[0]);
  return out;
}

BivariatePolynomial TruncatedSeries::to_polynomial() const {
  BivariatePolynomial out;
  for (int n = 0; n <= order_x_; ++n) {
    for (int m = 0; m <= order_y_; ++m) {
      const auto& c = rows_[static_cast<std::size_t>(n)]
                           [static_cast<std::size_t>(m)];
      if (c != 0) out += BivariatePolynomial::monomial(c, n, m);
    }
  }
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order_x_ != b.order_x_ || a.order_y_ != b.order_y_) {
    throw std::invalid_argument("adding series with different truncations");
  }
  TruncatedSeries out = a;
  for (std::size_t n = 0; n < out.rows_.size(); ++n) {
    for (std::size_t m = 0; m < out.rows_[n].size(); ++m) {
      out.rows_[n][m] += b.rows_[n][m];
    }
  }
  return out;
}

RationalGF::RationalGF(BivariatePolynomial numerator,
                       BivariatePolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.constant_term() == 0) {
    throw std::domain_error("denominator " + denominator_.to_string() +
                            " has zero constant term; not a power series");
  }
}

bool equivalent(const RationalGF& f, const RationalGF& g) {
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

RationalGF rational_add(const RationalGF& f, const RationalGF& g) {
  if (f.denominator() == g.denominator()) {
    return RationalGF(f.numerator() + g.numerator(), f.denominator());
  }
  return RationalGF(
      f.numerator() * g.denominator() + g.numerator() * f.denominator(),
      f.denominator() * g.denominator());
}

RationalGF rational_sub(const RationalGF& f, const RationalGF& g) {
  return rational_add(f, RationalGF(-g.numerator(), g.denominator()));
}

RationalGF rational_mul(const RationalGF& f, const RationalGF& g) {
  return RationalGF(f.numerator() * g.numerator(),
                    f.denominator() * g.denominator());
}

RationalGF rational_div(const RationalGF& f, const RationalGF& g) {
  BivariatePolynomial denominator = f.denominator() * g.numerator();
  if (denominator.constant_term() == 0) {
    throw std::domain_error(
        "quotient is not a formal power series: divisor numerator " +
        g.numerator().to_string() + " has zero constant term");
  }
  return RationalGF(f.numerator() * g.denominator(), std::move(denominator));
}

TruncatedSeries expand(const RationalGF& f, int order, int order_y) {
  if (order < 0) throw std::invalid_argument("expansion order must be >= 0");
  if (order_y < 0) order_y = order;
  TruncatedSeries out(order, order_y);

  const auto den = split_by_x(f.denominator(), order_y);
  const auto num = split_by_x(f.numerator(), order_y);
  const auto width = static_cast<std::size_t>(order_y) + 1;

  // Inverse of the x^0 slice of the denominator as a series in y. Its
  // constant term is the denominator's constant term, nonzero by invariant.
  Row inverse(width);
  Row den0(width);
  for (const auto& [d, c] : den[0]) den0[static_cast<std::size_t>(d)] = c;
  inverse[0] = 1 / den0[0];
  const bool den0_constant = den[0].size() == 1;
  if (!den0_constant) {
    for (std::size_t k = 1; k < width; ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (den0[j] != 0) acc += den0[j] * inverse[k - j];
      }
      inverse[k] = -acc * inverse[0];
    }
  }

  const Rational minus_one = -1;
  for (int n = 0; n <= order; ++n) {
    Row rhs(width);
    if (static_cast<std::size_t>(n) < num.size()) {
      for (const auto& [d, c] : num[static_cast<std::size_t>(n)]) {
        rhs[static_cast<std::size_t>(d)] += c;
      }
    }
    const int reach = std::min<int>(n, static_cast<int>(den.size()) - 1);
    for (int i = 1; i <= reach; ++i) {
      multiply_accumulate(den[static_cast<std::size_t>(i)],
                          out.row(n - i), rhs, minus_one);
    }
    if (den0_constant) {
      for (std::size_t m = 0; m < width; ++m) {
        if (rhs[m] != 0) out.set(n, static_cast<int>(m), rhs[m] * inverse[0]);
      }
    } else {
      for (std::size_t m = 0; m < width; ++m) {
        Rational acc = 0;
        for (std::size_t j = 0; j <= m; ++j) {
          if (rhs[j] != 0 && inverse[m - j] != 0) acc += rhs[j] * inverse[m - j];
        }
        out.set(n, static_cast<int>(m), std::move(acc));
      }
    }
  }
  return out;
}

RationalGF eval_y1(const RationalGF& f) {
  return RationalGF(f.numerator().substitute_y(1),
                    f.denominator().substitute_y(1));
}

RationalGF diff_y_at_1(const RationalGF& f) {
  const auto& n = f.numerator();
  const auto& d = f.denominator();
  BivariatePolynomial top = n.derivative_y() * d - n * d.derivative_y();
  BivariatePolynomial bottom = d * d;
  return RationalGF(top.substitute_y(1), bottom.substitute_y(1));
}

}  // namespace arndt
