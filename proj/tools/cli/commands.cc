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

#include "commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>

#include "arndt/bijection.h"
#include "arndt/enumerator.h"
#include "arndt/gf_catalog.h"
#include "output.h"
#include "reference.h"
#include "triangles.h"
#include "verify.h"

namespace arndt::cli {
namespace {

// Flag values shared by the subcommands; each subcommand binds the subset it
// understands.
struct Flags {
  int n = -1;
  int big_n = 10;
  int order = kDefaultSeriesOrder;
  std::string family = "arndt";
  int k = 0;
  std::string method = "gf";
  std::string format = "plain";
  int max_n = EnumerationLimits::kDefaultMaxN;
  std::string kind;
  std::string name;
  std::string sequence;
  std::string scope = "all";
  bool check = false;
  std::string data_dir;
  std::string inject_fault;
  int verify_max_n = -1;
};

EnumerationLimits limits_from(int max_n) {
  if (max_n < 0 || max_n > EnumerationLimits::kHardMaxN) {
    throw UsageError("--max-n must be in 0.." +
                     std::to_string(EnumerationLimits::kHardMaxN));
  }
  EnumerationLimits limits;
  limits.max_n = max_n;
  return limits;
}

bool takes_k(const std::string& name) {
  const auto& entries = gf::catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) throw UsageError("unknown series '" + name + "'");
  return it->takes_k;
}

// Catalog with x^3*y added to one entry's numerator, for checking that
// `verify` notices a corrupted constant.
CatalogLookup faulty_catalog(const std::string& target) {
  takes_k(target);  // validates the name
  return [target](const std::string& name, int k) {
    RationalGF f = gf::by_name(name, k);
    if (name != target) return f;
    return RationalGF(f.numerator() + BivariatePolynomial::monomial(1, 3, 1),
                      f.denominator());
  };
}

int cmd_enumerate(const Flags& f, bool k_given, std::ostream& out) {
  if (f.n < 0) throw UsageError("--n must be nonnegative");
  const FamilySpec family = parse_family(f.family, f.k, k_given);
  const OutputFormat format = parse_format(f.format);
  for (const auto& c : members_of(f.n, family, limits_from(f.max_n))) {
    write_composition(out, c, format);
  }
  return kExitOk;
}

int cmd_table(const Flags& f, bool k_given, std::ostream& out) {
  if (f.big_n < 0) throw UsageError("--N must be nonnegative");
  const CountTriangle triangle = compute_triangle(
      parse_statistic(f.kind), parse_family(f.family, f.k, k_given),
      parse_method(f.method), f.big_n, limits_from(f.max_n), default_catalog());
  write_triangle(out, triangle, parse_format(f.format));
  return kExitOk;
}

int cmd_series(const Flags& f, bool k_given, std::ostream& out) {
  if (f.order < 0) throw UsageError("--N/--order must be nonnegative");
  if (takes_k(f.name) && !k_given) {
    throw UsageError("series " + f.name + " requires --k");
  }
  const OutputFormat format = parse_format(f.format);
  const RationalGF generating_function = [&] {
    try {
      return gf::by_name(f.name, f.k);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  write_series(out, expand(generating_function, f.order), format);
  return kExitOk;
}

int cmd_bfile(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.big_n < 0) throw UsageError("--N must be nonnegative");
  const std::filesystem::path dir =
      f.data_dir.empty() ? default_reference_dir()
                         : std::filesystem::path(f.data_dir);
  std::optional<ReferenceSequence> meta;
  try {
    const auto all = load_reference_metadata(dir);
    if (const auto it = all.find(f.sequence); it != all.end()) meta = it->second;
  } catch (const std::runtime_error&) {
    if (f.check) throw;
  }
  const long first_index = meta ? meta->first_index : 1;
  const auto terms =
      compute_sequence(f.sequence, f.big_n, first_index, default_catalog());
  write_bfile(out, terms);
  if (!f.check) return kExitOk;
  if (!meta) throw UsageError("no bundled reference for '" + f.sequence + "'");
  const auto outcome =
      compare_to_reference(terms, read_bfile(dir / meta->file));
  if (outcome.mismatch) {
    const Mismatch& m = *outcome.mismatch;
    err << "mismatch against " << meta->file << " at index " << m.index
        << ": expected " << m.expected.get_str() << ", computed "
        << m.actual.get_str() << "\n";
    return kExitMismatch;
  }
  err << "checked " << outcome.compared << " terms against " << meta->file
      << "\n";
  return kExitOk;
}

int cmd_bijection(const Flags& f, std::ostream& out) {
  if (f.n < 0) throw UsageError("--n must be nonnegative");
  for (const auto& c : enumerate_reduced_ap(f.n, limits_from(f.max_n))) {
    out << c.to_string() << " -> " << reduced_ap_to_arndt(c).to_string()
        << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.scope = f.scope;
  options.max_n = f.verify_max_n;
  if (!f.inject_fault.empty()) options.catalog = faulty_catalog(f.inject_fault);
  std::size_t failed = 0;
  const auto results = run_verification(options, [&](const PropertyResult& r) {
    out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name;
    if (!r.passed) {
      out << " -- " << r.detail;
      ++failed;
    }
    out << "\n" << std::flush;
  });
  err << results.size() - failed << "/" << results.size()
      << " properties passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Enumerate and cross-check Arndt compositions"};
  app.name("arndt");
  app.require_subcommand(1);
  Flags f;

  auto* enumerate = app.add_subcommand("enumerate", "List compositions of n");
  enumerate->add_option("--n,--N", f.n, "Size n")->required();
  enumerate->add_option("--family", f.family, "Family")->capture_default_str();
  auto* enumerate_k = enumerate->add_option("--k", f.k, "Family parameter");
  enumerate->add_option("--format", f.format, "plain|csv|jsonl");
  enumerate->add_option("--max-n", f.max_n, "Brute-force cap");

  auto* table = app.add_subcommand("table", "Count triangle by parts or last part");
  table->add_option("kind", f.kind, "parts|last")->required();
  table->add_option("--N,--n", f.big_n, "Last row")->capture_default_str();
  table->add_option("--family", f.family, "Family")->capture_default_str();
  auto* table_k = table->add_option("--k", f.k, "Family parameter");
  table->add_option("--method", f.method, "gf|brute|formula")->capture_default_str();
  table->add_option("--format", f.format, "plain|csv|jsonl");
  table->add_option("--max-n", f.max_n, "Brute-force cap");

  auto* series = app.add_subcommand("series", "Expand a catalog generating function");
  series->add_option("name", f.name, "Catalog name")->required();
  series->add_option("--N,--n,--order", f.order, "Truncation order")
      ->capture_default_str();
  auto* series_k = series->add_option("--k", f.k, "Parameter");
  series->add_option("--format", f.format, "plain|csv|jsonl|bfile");

  auto* bfile = app.add_subcommand("bfile", "Emit or check a b-file");
  bfile->add_option("sequence", f.sequence,
                    "arndt-total|parts-triangle-flat|last-sum")
      ->required();
  bfile->add_option("--N,--n", f.big_n, "Last index")->capture_default_str();
  bfile->add_flag("--check", f.check, "Compare with the bundled reference");
  bfile->add_option("--data-dir", f.data_dir, "Reference directory");

  auto* bijection = app.add_subcommand(
      "bijection", "Map reduced anti-palindromic compositions to Arndt ones");
  bijection->add_option("--n,--N", f.n, "Size n")->required();
  bijection->add_option("--max-n", f.max_n, "Brute-force cap");

  auto* verify = app.add_subcommand("verify", "Run the cross-validation suite");
  verify->add_option("scope", f.scope, "all or a module name")
      ->capture_default_str();
  verify->add_option("--max-n", f.verify_max_n, "Upper bound on every n range");
  verify->add_option("--inject-fault", f.inject_fault,
                     "Corrupt one catalog entry (smoke test)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "arndt: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(f, enumerate_k->count() > 0, out);
    if (table->parsed()) return cmd_table(f, table_k->count() > 0, out);
    if (series->parsed()) return cmd_series(f, series_k->count() > 0, out);
    if (bfile->parsed()) return cmd_bfile(f, out, err);
    if (bijection->parsed()) return cmd_bijection(f, out);
    if (verify->parsed()) return cmd_verify(f, out, err);
  } catch (const CapExceeded& e) {
    err << "arndt: " << e.what() << " (raise --max-n to override)\n";
    return kExitFailure;
  } catch (const UsageError& e) {
    err << "arndt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "arndt: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace arndt::cli
