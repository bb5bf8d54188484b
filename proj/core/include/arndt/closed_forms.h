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

#ifndef ARNDT_CLOSED_FORMS_H_
#define ARNDT_CLOSED_FORMS_H_

#include <cstdint>

#include "arndt/count_triangle.h"

namespace arndt {

// Falling-factorial binomial p(p-1)...(p-q+1)/q!. Zero for q < 0 and one for
// q = 0 regardless of the sign of p; so binomial(-1, 0) = 1 and
// binomial(-1, 1) = -1. The a(n, 1) column relies on binomial(-1, 0) = 1.
BigInt gen_binomial(std::int64_t p, std::int64_t q);

// a(n, m) via the alternating single sum over l = 0..n-m-floor(m/2).
BigInt a_sum_alternating(int n, int m);

// a(n, m) via the positive sum over l = 0..floor((n-m-floor(m/2))/2), with
// floor((m-1)/2) = -1 at m = 0. The formula itself yields 0 at (0, 0); the
// empty composition is counted explicitly there.
BigInt a_sum_positive(int n, int m);

// Rows 0..max_n of a(n, m) from
//   a(n, m) = a(n-1, m) + a(n-2, m) - a(n-3, m) + a(n-3, m-2),  n >= 3, m >= 2
// seeded with a(n, 0) = [n = 0] and a(n, 1) = [n >= 1].
CountTriangle a_recurrence_triangle(int max_n);

// (m - n - 2 + floor(m/2)) a(n+2, m) + (m - floor(m/2)) a(n+1, m) + n a(n, m),
// read from `table`; identically zero for the Arndt triangle. Throws
// std::out_of_range when the table lacks rows n..n+2.
BigInt wz_residual(int n, int m, const CountTriangle& table);

// F_n as sum over m = 0..n of a_sum_alternating / of the positive summands.
// Throws std::domain_error for n < 1.
BigInt fibonacci_double_sum_alternating(int n);
BigInt fibonacci_double_sum_positive(int n);

// b(n, m), Arndt compositions of n with last part m, from the t1/t2
// decomposition. b(0, 0) = 1; b(n, 0) = 0 for n >= 1.
BigInt b_closed(int n, int m);
CountTriangle b_closed_triangle(int max_n);

// F_{n-m-2} + F_{n-2m-1}; agrees with b(n, m) for n >= 2m + 2, m >= 1.
// Throws std::domain_error outside that range.
BigInt b_fibonacci_form(int n, int m);

// Number of Arndt compositions of n with last part <= k (>= k). Closed forms
//   F_n - F_{n-k-1} - F_{n-2k-2}   and   F_{n-k} + F_{n-2k}
// are used when n >= 2k + 2, column sums of b_closed otherwise. k >= 1.
BigInt b_at_most(int n, int k);
BigInt b_at_least(int n, int k);
// The two closed forms alone; throw std::domain_error when n < 2k + 2.
BigInt b_at_most_closed(int n, int k);
BigInt b_at_least_closed(int n, int k);

// p(n) from the recurrence of (1 - x - x^2)^2 with numerator
// x - x^2 + x^4 - x^5.
BigInt pn_closed(int n);
// d(n) = floor(phi^n) = L_n - [n even] for n >= 1, d(0) = 0. Exact; no
// floating point.
BigInt dn_closed(int n);

}  // namespace arndt

#endif  // ARNDT_CLOSED_FORMS_H_
