#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "finfree/rational.hpp"

namespace finfree {

/// One named identity check. detail carries diagnostics (binding counts,
/// first failing instance) and is purely informational.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::size_t skipped = 0;  // parameter draws rejected by validity errors
  bool pass = true;

  const CheckResult* first_failure() const;
};

using Bindings = std::map<std::string, Rational>;

/// Canonical suite tokens accepted by run_suite / the CLI.
std::vector<std::string> verify_suites();

/// Resolves aliases (merge-law, even-mul, even-add) to canonical tokens;
/// throws ParseError on unknown tokens.
std::string canonical_suite(const std::string& token);

struct VerifyOptions {
  std::uint64_t seed = 0x5EEDF00Dull;
  std::size_t bindings = 200;   // random bindings for the thm216 sweep
  std::size_t pairs = 200;      // random polynomial pairs for prop38/prop312
  std::size_t m_max = 6;        // table rows run for m = 1..m_max
  std::size_t table_reps = 20;  // random bindings per (row, m)
  std::string fixture_dir;      // empty: $FINFREE_FIXTURE_DIR or compiled default
};

SuiteReport run_suite(const std::string& token, const VerifyOptions& opts = {});

/// One line per check plus a summary line.
std::string report_to_text(const SuiteReport& rep);
std::string report_to_json(const SuiteReport& rep);

// ---------------------------------------------------------------------------
// Fixture plumbing, exposed for tests.

/// Linear parameter expression: sum of coefficient * term over the entries.
/// Term keys: "1" (constant), "1/m", "1/m2", anything else names a symbol.
struct ParamExpr {
  std::map<std::string, Rational> terms;
};

Rational eval_expr(const ParamExpr& expr, std::size_t m, const Bindings& b);

std::vector<Rational> eval_exprs(const std::vector<ParamExpr>& exprs, std::size_t m,
                                 const Bindings& b);

/// Symbol with a named sampling window (see fixtures/README.md).
struct SymbolSpec {
  std::string name;
  std::string window;
};

/// from_differential_series(c, l, 2m/l, lower, upper) instantiated per (m, B).
struct FdsSpec {
  ParamExpr c;
  std::size_t l = 1;
  std::vector<ParamExpr> upper;
  std::vector<ParamExpr> lower;
};

struct ProductIdentityFixture {
  std::string name;
  std::string kind;  // "sym" or "sum"
  std::vector<SymbolSpec> symbols;
  FdsSpec p1, p2, p3;
};

struct SymRowFixture {
  std::string name;
  std::vector<SymbolSpec> symbols;
  std::vector<ParamExpr> lhs_upper, lhs_lower;
  std::string dil_kind;  // "sqrt_rational" or "imaginary_rational"
  ParamExpr dil_value;
  std::vector<ParamExpr> rhs_upper, rhs_lower;
};

/// hgp_even side with an optional sqrt(dilation_sq) dilation.
struct EvenSideSpec {
  std::optional<ParamExpr> dilation_sq;
  std::vector<ParamExpr> upper, lower;
};

struct SumRowFixture {
  std::string name;
  std::vector<SymbolSpec> symbols;
  EvenSideSpec lhs1, lhs2, rhs;
};

struct CatalogRowFixture {
  std::string name;
  std::vector<SymbolSpec> symbols;
};

/// Fixture directory resolution: explicit override, then $FINFREE_FIXTURE_DIR,
/// then the compiled-in source location.
std::string fixture_dir_or_default(const std::string& override_dir = {});

std::vector<ProductIdentityFixture> load_product_identities(const std::string& dir = {});
std::vector<SymRowFixture> load_table1_rows(const std::string& dir = {});
std::vector<SumRowFixture> load_table2_rows(const std::string& dir = {});
std::vector<CatalogRowFixture> load_table3_rows(const std::string& dir = {});

/// Exact instantiated checks. Validity errors (DegenerateParameter,
/// InvalidLowerParameter) propagate; the suite driver counts them as skips.
bool verify_product_identity(const ProductIdentityFixture& fx, std::size_t m,
                             const Bindings& b);
bool verify_symmetrization_row(const SymRowFixture& row, std::size_t m, const Bindings& b);
bool verify_even_sum_row(const SumRowFixture& row, std::size_t m, const Bindings& b);

/// Draws a value from a named window (ParseError on unknown window names).
Rational sample_window(const std::string& window, std::size_t m, std::mt19937_64& rng);

}  // namespace finfree
