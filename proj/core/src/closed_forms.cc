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

#include "arndt/closed_forms.h"

#include <array>
#include <stdexcept>
#include <string>

#include "arndt/fibonacci.h"

namespace arndt {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int half(int m) { return m / 2; }  // m >= 0

void require_nonnegative(int n, int m) {
  if (n < 0 || m < 0) {
    throw std::domain_error("indices must be >= 0, got (" + std::to_string(n) +
                            ", " + std::to_string(m) + ")");
  }
}

BigInt positive_sum_raw(int n, int m) {
  const int j = half(m);
  const std::int64_t top = std::int64_t{n} - m - j;
  if (top < 0) return 0;
  const std::int64_t upper = floor_div(top, 2);
  const std::int64_t q = floor_div(std::int64_t{m} - 1, 2);
  BigInt sum = 0;
  for (std::int64_t l = 0; l <= upper; ++l) {
    sum += gen_binomial(j + l - 1, l) * gen_binomial(n - 2 * j - 2 * l - 1, q);
  }
  return sum;
}

BigInt t1(int k) {
  if (k == 0) return 1;
  if (k == 1) return 0;
  return fibonacci(k - 2);
}

BigInt t2(int k) {
  if (k == 0) return 0;
  if (k == 1) return 1;
  return fibonacci(k - 1);
}

void require_k(int k) {
  if (k < 1) {
    throw std::domain_error("cumulative last-part counts need k >= 1, got " +
                            std::to_string(k));
  }
}

}  // namespace

BigInt gen_binomial(std::int64_t p, std::int64_t q) {
  if (q < 0) return 0;
  if (q == 0) return 1;
  BigInt top = static_cast<long>(p);
  BigInt out;
  // mpz_bin_ui handles negative tops via (-p choose q) = (-1)^q (p+q-1 choose q).
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(q));
  return out;
}

BigInt a_sum_alternating(int n, int m) {
  require_nonnegative(n, m);
  const std::int64_t upper = std::int64_t{n} - m - half(m);
  if (upper < 0) return 0;
  BigInt sum = 0;
  for (std::int64_t l = 0; l <= upper; ++l) {
    BigInt term = gen_binomial(m + l - 1, l) *
                  gen_binomial(std::int64_t{n} - m - l - 1, upper - l);
    if ((upper - l) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

BigInt a_sum_positive(int n, int m) {
  require_nonnegative(n, m);
  if (n == 0 && m == 0) return 1;
  return positive_sum_raw(n, m);
}

CountTriangle a_recurrence_triangle(int max_n) {
  CountTriangle a(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    a.set(n, 0, n == 0 ? 1 : 0);
    if (n >= 1) a.set(n, 1, 1);
    if (n < 3) continue;
    for (int m = 2; m <= n; ++m) {
      a.set(n, m,
            a.at(n - 1, m) + a.at(n - 2, m) - a.at(n - 3, m) +
                a.at(n - 3, m - 2));
    }
  }
  return a;
}

BigInt wz_residual(int n, int m, const CountTriangle& table) {
  require_nonnegative(n, m);
  if (!table.has_row(n + 2)) {
    throw std::out_of_range("WZ residual at n=" + std::to_string(n) +
                            " needs rows through " + std::to_string(n + 2) +
                            ", table has " + std::to_string(table.num_rows()));
  }
  const int fm = half(m);
  return BigInt(m - n - 2 + fm) * table.at(n + 2, m) +
         BigInt(m - fm) * table.at(n + 1, m) + BigInt(n) * table.at(n, m);
}

BigInt fibonacci_double_sum_alternating(int n) {
  if (n < 1) throw std::domain_error("double sums are stated for n >= 1");
  BigInt sum = 0;
  for (int m = 0; m <= n; ++m) sum += a_sum_alternating(n, m);
  return sum;
}

BigInt fibonacci_double_sum_positive(int n) {
  if (n < 1) throw std::domain_error("double sums are stated for n >= 1");
  BigInt sum = 0;
  for (int m = 0; m <= n; ++m) sum += positive_sum_raw(n, m);
  return sum;
}

BigInt b_closed(int n, int m) {
  if (n < 0 || m < 0) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  if (m == 0) return 0;
  if (n < m) return 0;
  if (n < 2 * m) return t1(n - m);
  return t1(n - m) + t2(n - 2 * m);
}

CountTriangle b_closed_triangle(int max_n) {
  CountTriangle b(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= n; ++m) b.set(n, m, b_closed(n, m));
  }
  return b;
}

BigInt b_fibonacci_form(int n, int m) {
  if (m < 1 || n < 2 * m + 2) {
    throw std::domain_error("F_{n-m-2} + F_{n-2m-1} needs m >= 1, n >= 2m+2");
  }
  return fibonacci(n - m - 2) + fibonacci(n - 2 * m - 1);
}

BigInt b_at_most_closed(int n, int k) {
  require_k(k);
  if (n < 2 * k + 2) throw std::domain_error("closed form needs n >= 2k+2");
  return fibonacci(n) - fibonacci(n - k - 1) - fibonacci(n - 2 * k - 2);
}

BigInt b_at_least_closed(int n, int k) {
  require_k(k);
  if (n < 2 * k + 2) throw std::domain_error("closed form needs n >= 2k+2");
  return fibonacci(n - k) + fibonacci(n - 2 * k);
}

BigInt b_at_most(int n, int k) {
  require_k(k);
  if (n >= 2 * k + 2) return b_at_most_closed(n, k);
  BigInt sum = 0;
  for (int j = 1; j <= k; ++j) sum += b_closed(n, j);
  return sum;
}

BigInt b_at_least(int n, int k) {
  require_k(k);
  if (n >= 2 * k + 2) return b_at_least_closed(n, k);
  BigInt sum = 0;
  for (int j = k; j <= n; ++j) sum += b_closed(n, j);
  return sum;
}

BigInt pn_closed(int n) {
  if (n < 0) throw std::domain_error("p(n) needs n >= 0");
  // (1 - x - x^2)^2 = 1 - 2x - x^2 + 2x^3 + x^4.
  constexpr std::array<int, 4> kFeedback = {2, 1, -2, -1};
  constexpr std::array<int, 6> kNumerator = {0, 1, -1, 0, 1, -1};
  std::vector<BigInt> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    BigInt v = i < static_cast<int>(kNumerator.size())
                   ? BigInt(kNumerator[static_cast<std::size_t>(i)])
                   : BigInt(0);
    for (int lag = 1; lag <= 4 && lag <= i; ++lag) {
      v += kFeedback[static_cast<std::size_t>(lag - 1)] *
           p[static_cast<std::size_t>(i - lag)];
    }
    p.push_back(std::move(v));
  }
  return p.back();
}

BigInt dn_closed(int n) {
  if (n < 0) throw std::domain_error("d(n) needs n >= 0");
  if (n == 0) return 0;
  // phi^n = L_n - psi^n with |psi| < 1 and psi^n > 0 exactly when n is even.
  return n % 2 == 1 ? lucas(n) : lucas(n) - 1;
}

}  // namespace arndt
