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

#include "verify.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <set>
#include <sstream>

#include "arndt/asymptotics.h"
#include "arndt/bijection.h"
#include "arndt/closed_forms.h"
#include "arndt/fibonacci.h"
#include "arndt/gf_catalog.h"

namespace arndt::cli {
namespace {

// Empty string means the property holds; otherwise the first counterexample.
using Check = std::function<std::string()>;

struct Property {
  std::string module;
  std::string name;
  Check check;
};

std::string at(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string first_difference(const CountTriangle& expected,
                             const CountTriangle& actual, int max_n,
                             const std::string& what) {
  for (int n = 0; n <= max_n; ++n) {
    if (expected.row(n) == actual.row(n)) continue;
    const std::size_t width =
        std::max(expected.row(n).size(), actual.row(n).size());
    for (std::size_t m = 0; m < width; ++m) {
      const int mi = static_cast<int>(m);
      if (expected.at(n, mi) != actual.at(n, mi)) {
        return what + " differs at " + at(n, mi) + ": " +
               expected.at(n, mi).get_str() + " vs " +
               actual.at(n, mi).get_str();
      }
    }
  }
  return {};
}

double relative_error(double estimate, const BigInt& exact) {
  const double e = exact.get_d();
  return std::abs(estimate - e) / std::abs(e);
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : opt_(options) {}

  int cap(int default_n) const {
    return opt_.max_n < 0 ? default_n : std::min(default_n, opt_.max_n);
  }
  RationalGF gf(const std::string& name, int k = 0) const {
    return opt_.catalog(name, k);
  }
  CountTriangle brute_parts(int max_n, const FamilySpec& family) const {
    return parts_triangle(max_n, family, opt_.limits);
  }

  std::vector<Property> properties() const;

 private:
  void composition_core(std::vector<Property>& out) const;
  void enumerator(std::vector<Property>& out) const;
  void power_series(std::vector<Property>& out) const;
  void gf_catalog(std::vector<Property>& out) const;
  void closed_forms(std::vector<Property>& out) const;
  void bijection(std::vector<Property>& out) const;
  void asymptotics(std::vector<Property>& out) const;

  const VerifyOptions& opt_;
};

void Suite::composition_core(std::vector<Property>& out) const {
  const std::string mod = "composition-core";
  const int n14 = cap(14);
  out.push_back({mod,
                 "k-arndt(0) and block-arndt(2) coincide with arndt (n<=" +
                     std::to_string(n14) + ")",
                 [=, this]() -> std::string {
                   for (int n = 0; n <= n14; ++n) {
                     for (const auto& c : compositions_of(n, opt_.limits)) {
                       const bool a = is_arndt(c);
                       if (is_k_arndt(c, 0) != a || is_k_block_arndt(c, 2) != a) {
                         return "disagreement on " + c.to_string();
                       }
                     }
                   }
                   return {};
                 }});
  out.push_back({mod,
                 "block-arndt(1) accepts every composition (n<=" +
                     std::to_string(n14) + ")",
                 [=, this]() -> std::string {
                   for (int n = 0; n <= n14; ++n) {
                     for (const auto& c : compositions_of(n, opt_.limits)) {
                       if (!is_k_block_arndt(c, 1)) return "rejected " + c.to_string();
                     }
                   }
                   return {};
                 }});
  const int n12 = cap(12);
  out.push_back(
      {mod,
       "flip classes have 2^floor(l/2) members and one representative (n<=" +
           std::to_string(n12) + ")",
       [=, this]() -> std::string {
         for (int n = 0; n <= n12; ++n) {
           for (const auto& c :
                members_of(n, FamilySpec::antipalindromic(), opt_.limits)) {
             const auto cls = flip_class(c);
             if (cls.size() != (std::size_t{1} << (c.size() / 2))) {
               return "class of " + c.to_string() + " has " +
                      std::to_string(cls.size()) + " members";
             }
             const auto reps = std::count_if(cls.begin(), cls.end(), [](const Composition& x) {
               return is_reduced_ap_representative(x);
             });
             if (reps != 1) {
               return "class of " + c.to_string() + " has " +
                      std::to_string(reps) + " representatives";
             }
           }
         }
         return {};
       }});
}

void Suite::enumerator(std::vector<Property>& out) const {
  const std::string mod = "enumerator";
  const int n16 = cap(16);
  out.push_back({mod,
                 "stream yields 2^(n-1) distinct compositions of n (n<=" +
                     std::to_string(n16) + ")",
                 [=, this]() -> std::string {
                   for (int n = 0; n <= n16; ++n) {
                     std::set<Composition> seen;
                     for (const auto& c : compositions_of(n, opt_.limits)) {
                       if (c.weight() != n) return "wrong weight: " + c.to_string();
                       if (!seen.insert(c).second) return "duplicate " + c.to_string();
                     }
                     const std::size_t expected =
                         n == 0 ? 1 : std::size_t{1} << (n - 1);
                     if (seen.size() != expected) {
                       return "n=" + std::to_string(n) + ": " +
                              std::to_string(seen.size()) + " compositions";
                     }
                   }
                   return {};
                 }});
  const int n22 = cap(22);
  out.push_back({mod,
                 "parts and last-part row sums equal F_n (1<=n<=" +
                     std::to_string(n22) + ")",
                 [=, this]() -> std::string {
                   for (int n = 1; n <= n22; ++n) {
                     const auto stats =
                         brute_force_stats(n, FamilySpec::arndt(), opt_.limits);
                     BigInt by_parts = 0;
                     BigInt by_last = 0;
                     for (const auto& v : stats.by_parts) by_parts += v;
                     for (const auto& v : stats.by_last) by_last += v;
                     if (by_parts != fibonacci(n) || by_last != fibonacci(n)) {
                       return "n=" + std::to_string(n) + ": " + by_parts.get_str() +
                              ", " + by_last.get_str() + " vs F_n=" +
                              fibonacci(n).get_str();
                     }
                   }
                   return {};
                 }});
  const int n14 = cap(14);
  out.push_back({mod,
                 "reduced anti-palindromic counts equal Arndt counts by parts "
                 "(n<=" + std::to_string(n14) + ")",
                 [=, this]() {
                   return first_difference(
                       brute_parts(n14, FamilySpec::arndt()),
                       brute_parts(n14, FamilySpec::reduced_ap()), n14,
                       "reduced-ap vs arndt");
                 }});
  const int n12 = cap(12);
  out.push_back({mod,
                 "anti-palindromic counts are 2^floor(m/2) x reduced counts "
                 "(n<=" + std::to_string(n12) + ")",
                 [=, this]() -> std::string {
                   const auto ap = brute_parts(n12, FamilySpec::antipalindromic());
                   const auto rap = brute_parts(n12, FamilySpec::reduced_ap());
                   for (int n = 0; n <= n12; ++n) {
                     for (int m = 0; m <= n; ++m) {
                       BigInt scaled = rap.at(n, m);
                       scaled <<= static_cast<mp_bitcnt_t>(m / 2);
                       if (ap.at(n, m) != scaled) return "mismatch at " + at(n, m);
                     }
                   }
                   return {};
                 }});
}

void Suite::power_series(std::vector<Property>& out) const {
  const std::string mod = "power-series";
  const int n40 = cap(40);
  struct Named {
    std::string name;
    int k;
  };
  const std::vector<Named> catalog = {
      {"arndt", 0},       {"antipalindromic", 0}, {"reduced-ap", 0},
      {"last-part", 0},   {"total-parts", 0},     {"total-last", 0},
      {"fibonacci", 0},   {"k-arndt", -3},        {"k-arndt", 3},
      {"block-arndt", 3}, {"block-arndt", 4},     {"distinct-parts", 3},
  };
  for (const auto& entry : catalog) {
    const std::string label =
        entry.name + (entry.name == "k-arndt" || entry.name == "block-arndt" ||
                              entry.name == "distinct-parts"
                          ? "(k=" + std::to_string(entry.k) + ")"
                          : "");
    out.push_back(
        {mod,
         label + ": denominator x expansion == numerator, nonnegative integer "
                 "coefficients (N=" + std::to_string(n40) + ")",
         [=, this]() -> std::string {
           const auto f = gf(entry.name, entry.k);
           const auto series = expand(f, n40);
           const auto product =
               (f.denominator() * series.to_polynomial()).truncated(n40, n40);
           if (product != f.numerator().truncated(n40, n40)) {
             return "round trip fails for " + label;
           }
           if (!series.all_nonnegative_integers()) {
             return label + " has a negative or fractional coefficient";
           }
           if (!series.statistic_bounded_by_weight()) {
             return label + " has a coefficient with m > n";
           }
           return {};
         }});
  }
  out.push_back({mod, "expansion is linear on random rational series",
                 []() -> std::string {
                   std::mt19937 rng(20260101);
                   std::uniform_int_distribution<int> coeff(-3, 3);
                   std::uniform_int_distribution<int> deg(0, 3);
                   auto random_poly = [&](bool unit_constant) {
                     BivariatePolynomial p = unit_constant ? 1 : coeff(rng);
                     for (int t = 0; t < 4; ++t) {
                       const int dx = deg(rng) + (unit_constant ? 1 : 0);
                       p += BivariatePolynomial::monomial(coeff(rng), dx, deg(rng));
                     }
                     return p;
                   };
                   for (int trial = 0; trial < 20; ++trial) {
                     const RationalGF f(random_poly(false), random_poly(true));
                     const RationalGF g(random_poly(false), random_poly(true));
                     if (expand(f + g, 12) != expand(f, 12) + expand(g, 12)) {
                       return "trial " + std::to_string(trial);
                     }
                   }
                   return {};
                 }});
}

void Suite::gf_catalog(std::vector<Property>& out) const {
  const std::string mod = "gf-catalog";
  const auto brute_match = [&](const std::string& label, const std::string& name,
                               int k, FamilySpec family, int max_n) {
    out.push_back({mod,
                   label + " rows match brute force (n<=" + std::to_string(max_n) + ")",
                   [=, this]() {
                     return first_difference(brute_parts(max_n, family),
                                             expand(gf(name, k), max_n).to_count_triangle(),
                                             max_n, label);
                   }});
  };
  brute_match("arndt", "arndt", 0, FamilySpec::arndt(), cap(14));
  brute_match("antipalindromic", "antipalindromic", 0,
              FamilySpec::antipalindromic(), cap(12));
  brute_match("reduced-ap", "reduced-ap", 0, FamilySpec::reduced_ap(), cap(14));
  for (int k = -3; k <= 3; ++k) {
    brute_match("k-arndt(k=" + std::to_string(k) + ")", "k-arndt", k,
                FamilySpec::k_arndt(k), cap(12));
  }
  for (int k = 1; k <= 4; ++k) {
    brute_match("block-arndt(k=" + std::to_string(k) + ")", "block-arndt", k,
                FamilySpec::k_block_arndt(k), cap(12));
  }
  const int n14 = cap(14);
  out.push_back({mod,
                 "last-part rows match brute force (n<=" + std::to_string(n14) + ")",
                 [=, this]() {
                   return first_difference(
                       last_triangle(n14, FamilySpec::arndt(), opt_.limits),
                       expand(gf("last-part"), n14).to_count_triangle(), n14,
                       "last-part");
                 }});
  out.push_back({mod, "reduced-ap equals arndt as a polynomial pair",
                 [=, this]() -> std::string {
                   return gf("reduced-ap") == gf("arndt") ? "" : "pairs differ";
                 }});
  out.push_back({mod, "total-parts == d/dy arndt at y=1; total-last == d/dy last-part at y=1",
                 [=, this]() -> std::string {
                   if (!equivalent(diff_y_at_1(gf("arndt")), gf("total-parts"))) {
                     return "total-parts";
                   }
                   if (!equivalent(diff_y_at_1(gf("last-part")), gf("total-last"))) {
                     return "total-last";
                   }
                   return {};
                 }});
  out.push_back({mod, "block-arndt(3), block-arndt(4) equal their closed forms",
                 [=, this]() -> std::string {
                   if (!equivalent(gf("block-arndt", 3), gf::k_block3_closed_form())) {
                     return "block-arndt(3)";
                   }
                   if (!equivalent(gf("block-arndt", 4), gf::k_block4_closed_form())) {
                     return "block-arndt(4)";
                   }
                   if (!equivalent(eval_y1(gf("block-arndt", 3)),
                                   gf::k_block3_total_closed_form())) {
                     return "block-arndt(3) at y=1";
                   }
                   if (!equivalent(eval_y1(gf("block-arndt", 4)),
                                   gf::k_block4_total_closed_form())) {
                     return "block-arndt(4) at y=1";
                   }
                   return {};
                 }});
  const int n30 = cap(30);
  out.push_back({mod,
                 "block-arndt(2) and k-arndt(0) expansions equal arndt (n<=" +
                     std::to_string(n30) + ")",
                 [=, this]() -> std::string {
                   const auto a = expand(gf("arndt"), n30);
                   if (expand(gf("block-arndt", 2), n30) != a) return "block-arndt(2)";
                   if (expand(gf("k-arndt", 0), n30) != a) return "k-arndt(0)";
                   return {};
                 }});
  out.push_back({mod, "k-arndt totals at y=1 match closed forms (-5<=k<=5)",
                 [=, this]() -> std::string {
                   for (int k = -5; k <= 5; ++k) {
                     if (!equivalent(eval_y1(gf("k-arndt", k)), gf::k_arndt_total(k))) {
                       return "k=" + std::to_string(k);
                     }
                   }
                   return {};
                 }});
  const int n20 = cap(20);
  out.push_back({mod,
                 "antipalindromic = 2^floor(m/2) x reduced-ap coefficients (n<=" +
                     std::to_string(n20) + ")",
                 [=, this]() -> std::string {
                   const auto ap = expand(gf("antipalindromic"), n20);
                   const auto bp = expand(gf("reduced-ap"), n20);
                   for (int n = 0; n <= n20; ++n) {
                     for (int m = 0; m <= n; ++m) {
                       Rational scale = 1;
                       for (int i = 0; i < m / 2; ++i) scale *= 2;
                       if (ap.coefficient(n, m) != scale * bp.coefficient(n, m)) {
                         return "mismatch at " + at(n, m);
                       }
                     }
                   }
                   return {};
                 }});
}

void Suite::closed_forms(std::vector<Property>& out) const {
  const std::string mod = "closed-forms";
  const int n40 = cap(40);
  const int n14 = cap(14);
  out.push_back(
      {mod,
       "alternating sum == positive sum == recurrence == arndt GF (n<=" +
           std::to_string(n40) + "), == brute force (n<=" + std::to_string(n14) + ")",
       [=, this]() -> std::string {
         const auto rec = a_recurrence_triangle(n40);
         const auto series = expand(gf("arndt"), n40).to_count_triangle();
         const auto brute = brute_parts(n14, FamilySpec::arndt());
         for (int n = 0; n <= n40; ++n) {
           for (int m = 0; m <= n; ++m) {
             const BigInt alt = a_sum_alternating(n, m);
             if (a_sum_positive(n, m) != alt || rec.at(n, m) != alt ||
                 series.at(n, m) != alt || (n <= n14 && brute.at(n, m) != alt)) {
               return "disagreement at " + at(n, m);
             }
           }
         }
         return {};
       }});
  out.push_back({mod,
                 "WZ recurrence residual vanishes (n<=" + std::to_string(n40) +
                     ", m<=n+2)",
                 [=]() -> std::string {
                   const auto tri = a_recurrence_triangle(n40 + 2);
                   for (int n = 0; n <= n40; ++n) {
                     for (int m = 0; m <= n + 2; ++m) {
                       if (wz_residual(n, m, tri) != 0) return "nonzero at " + at(n, m);
                     }
                   }
                   return {};
                 }});
  out.push_back({mod,
                 "a(n,.) and b(n,.) rows sum to F_n; both double sums equal F_n "
                 "(1<=n<=" + std::to_string(n40) + ")",
                 [=]() -> std::string {
                   const auto a = a_recurrence_triangle(n40);
                   const auto b = b_closed_triangle(n40);
                   for (int n = 1; n <= n40; ++n) {
                     const BigInt f = fibonacci(n);
                     if (a.row_sum(n) != f) return "a row " + std::to_string(n);
                     if (b.row_sum(n) != f) return "b row " + std::to_string(n);
                     if (fibonacci_double_sum_alternating(n) != f) {
                       return "alternating double sum at " + std::to_string(n);
                     }
                     if (fibonacci_double_sum_positive(n) != f) {
                       return "positive double sum at " + std::to_string(n);
                     }
                   }
                   return {};
                 }});
  out.push_back({mod,
                 "b_closed rows equal last-part GF (n<=" + std::to_string(n40) + ")",
                 [=, this]() {
                   return first_difference(
                       b_closed_triangle(n40),
                       expand(gf("last-part"), n40).to_count_triangle(), n40,
                       "b_closed vs last-part");
                 }});
  out.push_back({mod,
                 "b(n,m) = F_{n-m-2} + F_{n-2m-1} and cumulative identities "
                 "(m<=8, n<=" + std::to_string(n40) + ")",
                 [=]() -> std::string {
                   for (int m = 1; m <= 8; ++m) {
                     for (int n = 2 * m + 2; n <= n40; ++n) {
                       if (b_closed(n, m) != b_fibonacci_form(n, m)) {
                         return "F form at " + at(n, m);
                       }
                       BigInt at_most = 0;
                       BigInt at_least = 0;
                       for (int j = 1; j <= n; ++j) {
                         (j <= m ? at_most : at_least) += b_closed(n, j);
                         if (j == m) at_least += b_closed(n, j);
                       }
                       if (b_at_most_closed(n, m) != at_most) return "<= at " + at(n, m);
                       if (b_at_least_closed(n, m) != at_least) return ">= at " + at(n, m);
                     }
                   }
                   return {};
                 }});
  const int n20 = cap(20);
  out.push_back({mod,
                 "p(n), d(n) closed forms match brute force (n<=" +
                     std::to_string(n20) + ") and their GFs (n<=" +
                     std::to_string(n40) + ")",
                 [=, this]() -> std::string {
                   for (int n = 0; n <= n20; ++n) {
                     const auto stats =
                         brute_force_stats(n, FamilySpec::arndt(), opt_.limits);
                     if (stats.total_parts != pn_closed(n)) return "p(" + std::to_string(n) + ")";
                     if (stats.total_last != dn_closed(n)) return "d(" + std::to_string(n) + ")";
                   }
                   const auto p = expand(gf("total-parts"), n40, 0);
                   const auto d = expand(gf("total-last"), n40, 0);
                   for (int n = 0; n <= n40; ++n) {
                     if (p.coefficient(n, 0) != Rational(pn_closed(n))) {
                       return "P(x) at " + std::to_string(n);
                     }
                     if (d.coefficient(n, 0) != Rational(dn_closed(n))) {
                       return "D(x) at " + std::to_string(n);
                     }
                   }
                   return {};
                 }});
}

void Suite::bijection(std::vector<Property>& out) const {
  const std::string mod = "bijection";
  const int n18 = cap(18);
  out.push_back(
      {mod,
       "reduced-ap -> arndt is a weight/parts preserving bijection with "
       "identity round trips (n<=" + std::to_string(n18) + ")",
       [=, this]() -> std::string {
         for (int n = 0; n <= n18; ++n) {
           std::set<Composition> image;
           for (const auto& c : enumerate_reduced_ap(n, opt_.limits)) {
             const Composition a = reduced_ap_to_arndt(c);
             if (!is_arndt(a) || a.weight() != c.weight() || a.size() != c.size()) {
               return "bad image of " + c.to_string();
             }
             if (arndt_to_reduced_ap(a) != c) return "round trip of " + c.to_string();
             if (!image.insert(a).second) return "collision at " + a.to_string();
           }
           std::set<Composition> arndt;
           for (const auto& a : members_of(n, FamilySpec::arndt(), opt_.limits)) {
             if (reduced_ap_to_arndt(arndt_to_reduced_ap(a)) != a) {
               return "round trip of " + a.to_string();
             }
             arndt.insert(a);
           }
           if (image != arndt) return "image differs at n=" + std::to_string(n);
         }
         return {};
       }});
}

void Suite::asymptotics(std::vector<Property>& out) const {
  const std::string mod = "asymptotics";
  out.push_back({mod, "expected last part within 0.1% of sqrt 5 at n=60, converging",
                 []() -> std::string {
                   const double limit = expected_last_limit();
                   double previous = 1e300;
                   for (int n : {20, 40, 60}) {
                     const double gap = std::abs(expected_last(n).get_d() - limit);
                     if (gap > previous) return "gap grew at n=" + std::to_string(n);
                     previous = gap;
                   }
                   return previous / limit <= 1e-3 ? "" : "n=60 outside 0.1%";
                 }});
  out.push_back({mod, "expected parts / n within 1% of 3/sqrt 5 - 1 at n=200",
                 []() -> std::string {
                   const double ratio = expected_parts(200).get_d() / 200.0;
                   const double slope = expected_parts_slope();
                   return std::abs(ratio - slope) / slope <= 1e-2 ? "" : "outside 1%";
                 }});
  out.push_back({mod, "dominant-pole estimate of F_n within 0.5% (30<=n<=80)",
                 [=, this]() -> std::string {
                   const PoleSpec pole{golden_ratio(), 1};
                   for (int n = 30; n <= 80; ++n) {
                     if (relative_error(dominant_asymptotic(gf("fibonacci"), pole, n),
                                        fibonacci(n)) > 5e-3) {
                       return "n=" + std::to_string(n);
                     }
                   }
                   return {};
                 }});
  out.push_back({mod,
                 "dominant-pole estimate of p(n) within 1% for 160<=n<=300, error "
                 "decreasing",
                 [=, this]() -> std::string {
                   const PoleSpec pole{golden_ratio(), 2};
                   double previous = 1e300;
                   for (int n = 60; n <= 300; n += 20) {
                     const double err = relative_error(
                         dominant_asymptotic(gf("total-parts"), pole, n), pn_closed(n));
                     if (err > previous) return "error grew at n=" + std::to_string(n);
                     if (n >= 160 && err > 1e-2) return "n=" + std::to_string(n);
                     previous = err;
                   }
                   return {};
                 }});
  out.push_back({mod, "a(600,m) / estimate within 15% of 1 for m in {3,4}",
                 []() -> std::string {
                   for (int m : {3, 4}) {
                     const double ratio =
                         a_sum_positive(600, m).get_d() / a_asymptotic(600, m);
                     if (std::abs(ratio - 1.0) > 0.15) return "m=" + std::to_string(m);
                   }
                   return {};
                 }});
  out.push_back({mod, "b(60,m) / estimate within 0.1% of 1 for m<=3",
                 []() -> std::string {
                   for (int m = 1; m <= 3; ++m) {
                     const double ratio = b_closed(60, m).get_d() / b_asymptotic(60, m);
                     if (std::abs(ratio - 1.0) > 1e-3) return "m=" + std::to_string(m);
                   }
                   return {};
                 }});
}

std::vector<Property> Suite::properties() const {
  std::vector<Property> out;
  composition_core(out);
  enumerator(out);
  power_series(out);
  gf_catalog(out);
  closed_forms(out);
  bijection(out);
  asymptotics(out);
  return out;
}

}  // namespace

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> scopes = {
      "composition-core", "enumerator", "power-series", "gf-catalog",
      "closed-forms",     "bijection",  "asymptotics",
  };
  return scopes;
}

std::vector<PropertyResult> run_verification(
    const VerifyOptions& options,
    const std::function<void(const PropertyResult&)>& on_result) {
  const auto& scopes = verify_scopes();
  if (options.scope != "all" &&
      std::find(scopes.begin(), scopes.end(), options.scope) == scopes.end()) {
    throw UsageError("unknown verify scope '" + options.scope + "'");
  }
  Suite suite(options);
  std::vector<PropertyResult> results;
  for (const auto& property : suite.properties()) {
    if (options.scope != "all" && property.module != options.scope) continue;
    PropertyResult result{property.module, property.name, false, {}};
    try {
      result.detail = property.check();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace arndt::cli
