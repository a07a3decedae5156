#include "finfree/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "finfree/commutator.hpp"
#include "finfree/conv.hpp"
#include "finfree/errors.hpp"
#include "finfree/hgp.hpp"
#include "finfree/measures.hpp"

namespace finfree {
namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::parse_error, "bad JSON in " + path + ": " + std::string(e.what()));
  }
  return j;
}

ParamExpr expr_from_json(const json& j) {
  ParamExpr e;
  if (j.is_string()) {
    e.terms["1"] = parse_rational(j.get<std::string>());
    return e;
  }
  require(j.is_object(), errc::parse_error, "expression must be an object or a string");
  for (const auto& [key, val] : j.items()) {
    e.terms[key] = parse_rational(val.get<std::string>());
  }
  return e;
}

std::vector<ParamExpr> exprs_from_json(const json& j) {
  require(j.is_array(), errc::parse_error, "expected an array of expressions");
  std::vector<ParamExpr> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(expr_from_json(item));
  return out;
}

std::vector<SymbolSpec> symbols_from_json(const json& j) {
  std::vector<SymbolSpec> out;
  for (const auto& item : j) {
    out.push_back({item.at("name").get<std::string>(), item.at("window").get<std::string>()});
  }
  return out;
}

FdsSpec fds_from_json(const json& j) {
  FdsSpec s;
  s.c = expr_from_json(j.at("c"));
  s.l = j.at("l").get<std::size_t>();
  s.upper = exprs_from_json(j.at("upper"));
  s.lower = exprs_from_json(j.at("lower"));
  return s;
}

EvenSideSpec side_from_json(const json& j) {
  EvenSideSpec s;
  if (j.contains("dilation_sq")) s.dilation_sq = expr_from_json(j.at("dilation_sq"));
  s.upper = exprs_from_json(j.at("upper"));
  s.lower = exprs_from_json(j.at("lower"));
  return s;
}

bool poly_eq(const MonicPoly& a, const MonicPoly& b) { return a.e == b.e; }

std::string bindings_to_string(const Bindings& b) {
  std::string out;
  for (const auto& [k, v] : b) {
    if (!out.empty()) out += ", ";
    out += k + "=" + to_string(v);
  }
  return out;
}

const std::vector<Rational>& window_pool(const std::string& w) {
  static const std::map<std::string, std::vector<Rational>> pools = [] {
    auto mk = [](std::initializer_list<const char*> vals) {
      std::vector<Rational> out;
      for (const char* s : vals) out.push_back(parse_rational(s));
      return out;
    };
    std::map<std::string, std::vector<Rational>> p;
    p["any"] = mk({"2", "-1", "1/2", "5/3", "3", "-3/2"});
    p["neg"] = mk({"-1", "-2", "-3", "-3/2", "-5/2"});
    p["pos"] = mk({"1", "2", "3", "1/2", "5/4"});
    p["pos1"] = mk({"1", "2", "3", "3/2", "5/2"});
    p["posbig"] = mk({"3", "4", "5", "6"});
    p["unit"] = mk({"1/2", "1", "3/2", "2/3"});
    p["poshalf"] = mk({"1/2", "1", "2", "3/2", "3"});
    // Values usable as lower parameters at every degree: negative, or > 1.
    p["lower"] = mk({"-1", "-2", "-3/2", "-5/2", "2", "3", "5/2"});
    return p;
  }();
  auto it = pools.find(w);
  require(it != pools.end(), errc::parse_error, "unknown sampling window " + w);
  return it->second;
}

Bindings draw_bindings(const std::vector<SymbolSpec>& symbols, std::size_t m,
                       std::mt19937_64& rng) {
  Bindings b;
  for (const auto& s : symbols) b[s.name] = sample_window(s.window, m, rng);
  return b;
}

MonicPoly instantiate_fds(const FdsSpec& spec, std::size_t m, const Bindings& b) {
  require(spec.l >= 1 && (2 * m) % spec.l == 0, errc::invalid_parameter,
          "fds level l must divide 2m");
  const std::size_t half = 2 * m / spec.l;
  return from_differential_series(eval_expr(spec.c, m, b), spec.l, half,
                                  eval_exprs(spec.lower, m, b), eval_exprs(spec.upper, m, b));
}

MonicPoly instantiate_side(const EvenSideSpec& side, std::size_t m, const Bindings& b) {
  MonicPoly p = hgp_even(m, eval_exprs(side.upper, m, b), eval_exprs(side.lower, m, b));
  if (side.dilation_sq) {
    Rational v = eval_expr(*side.dilation_sq, m, b);
    if (v != 1) p = dilate(p, DilationScale::sqrt_rational(v));
  }
  return p;
}

bool is_skip_code(errc c) {
  return c == errc::degenerate_parameter || c == errc::invalid_lower_parameter ||
         c == errc::forbidden_alpha;
}

using InstanceCheck = std::function<bool(std::size_t, const Bindings&)>;

/// Runs check over m = 1..m_max with table_reps fresh bindings per m,
/// resampling on parameter-validity errors and counting them as skips.
CheckResult sweep_rows(const std::string& name, const std::vector<SymbolSpec>& symbols,
                       const VerifyOptions& opts, std::mt19937_64& rng, std::size_t& skipped,
                       const InstanceCheck& check) {
  CheckResult res{name, true, ""};
  std::size_t instances = 0;
  const std::size_t reps = symbols.empty() ? 1 : opts.table_reps;
  for (std::size_t m = 1; m <= opts.m_max && res.pass; ++m) {
    for (std::size_t rep = 0; rep < reps && res.pass; ++rep) {
      bool done = false;
      for (int attempt = 0; attempt < 64 && !done; ++attempt) {
        Bindings b = draw_bindings(symbols, m, rng);
        try {
          bool ok = check(m, b);
          done = true;
          ++instances;
          if (!ok) {
            res.pass = false;
            res.detail = "first failure at m=" + std::to_string(m) +
                         (b.empty() ? std::string() : " with " + bindings_to_string(b));
          }
        } catch (const Error& e) {
          if (!is_skip_code(e.code())) throw;
          ++skipped;
        }
      }
      if (!done && res.pass) {
        res.pass = false;
        res.detail = "no valid binding found at m=" + std::to_string(m);
      }
    }
  }
  if (res.pass) {
    res.detail = std::to_string(instances) + " instances, m <= " + std::to_string(opts.m_max);
  }
  return res;
}

void finalize(SuiteReport& rep) {
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.pass; });
}

MonicPoly random_half(std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> e(m + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    e[k] = r;
  }
  return MonicPoly(e);
}

MonicPoly random_even(std::size_t m, std::mt19937_64& rng) {
  return double_poly(random_half(m, rng));
}

std::vector<Rational> draw_tuple(const std::string& window, std::size_t count,
                                 std::mt19937_64& rng) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_window(window, 1, rng));
  return out;
}

// ---------------------------------------------------------------------------
// Suites

SuiteReport suite_tables1(const VerifyOptions& opts) {
  SuiteReport rep{"tables1", {}, 0, true};
  std::mt19937_64 rng(opts.seed);
  for (const auto& row : load_table1_rows(opts.fixture_dir)) {
    rep.checks.push_back(sweep_rows(
        "tables1/row/" + row.name, row.symbols, opts, rng, rep.skipped,
        [&](std::size_t m, const Bindings& b) { return verify_symmetrization_row(row, m, b); }));
  }
  for (const auto& fx : load_product_identities(opts.fixture_dir)) {
    if (fx.kind != "sym") continue;
    rep.checks.push_back(sweep_rows(
        "tables1/product/" + fx.name, fx.symbols, opts, rng, rep.skipped,
        [&](std::size_t m, const Bindings& b) { return verify_product_identity(fx, m, b); }));
  }
  finalize(rep);
  return rep;
}

SuiteReport suite_tables2(const VerifyOptions& opts) {
  SuiteReport rep{"tables2", {}, 0, true};
  std::mt19937_64 rng(opts.seed);
  for (const auto& row : load_table2_rows(opts.fixture_dir)) {
    rep.checks.push_back(sweep_rows(
        "tables2/row/" + row.name, row.symbols, opts, rng, rep.skipped,
        [&](std::size_t m, const Bindings& b) { return verify_even_sum_row(row, m, b); }));
  }
  {
    CheckResult r{"tables2/bernoulli_anchor", true, ""};
    for (std::size_t m = 1; m <= opts.m_max && r.pass; ++m) {
      if (!poly_eq(hgp_even(m, {}, {}), bernoulli(2 * m))) {
        r.pass = false;
        r.detail = "hgp_even(m,;) != bernoulli(2m) at m=" + std::to_string(m);
      }
    }
    if (r.pass) {
      MonicPoly rhs = dilate(hgp_even(1, {Rational(1)}, {Rational(2)}),
                             DilationScale::sqrt_rational(Rational(4)));
      MonicPoly expected(std::vector<Rational>{Rational(1), Rational(0), Rational(-2)});
      MonicPoly summed = boxplus(bernoulli(2), bernoulli(2));
      if (!poly_eq(rhs, expected) || !poly_eq(summed, expected)) {
        r.pass = false;
        r.detail = "m=1 anchor is not x^2 - 2";
      } else {
        r.detail = "x^2 - 2 anchor and family agreement up to m=" + std::to_string(opts.m_max);
      }
    }
    rep.checks.push_back(std::move(r));
  }
  for (const auto& fx : load_product_identities(opts.fixture_dir)) {
    if (fx.kind != "sum") continue;
    rep.checks.push_back(sweep_rows(
        "tables2/product/" + fx.name, fx.symbols, opts, rng, rep.skipped,
        [&](std::size_t m, const Bindings& b) { return verify_product_identity(fx, m, b); }));
  }
  finalize(rep);
  return rep;
}

SuiteReport suite_tables3(const VerifyOptions& opts) {
  SuiteReport rep{"tables3", {}, 0, true};
  std::mt19937_64 rng(opts.seed);
  for (const auto& row : load_table3_rows(opts.fixture_dir)) {
    rep.checks.push_back(sweep_rows(
        "tables3/row/" + row.name, row.symbols, opts, rng, rep.skipped,
        [&](std::size_t m, const Bindings& b) {
          std::vector<Rational> params;
          for (const auto& s : row.symbols) params.push_back(b.at(s.name));
          CatalogPair pair = table3_catalog(row.name, m, params);
          return poly_eq(pair.lhs, pair.rhs);
        }));
  }
  {
    CheckResult r{"tables3/kernel_anchor", true, ""};
    MonicPoly z2(std::vector<Rational>{Rational(1), Rational(0), Rational(-2, 3)});
    MonicPoly b2(std::vector<Rational>{Rational(1), Rational(0), Rational(-8, 3)});
    if (!poly_eq(z_kernel(2), z2) || !poly_eq(table3_catalog("hermite", 1).rhs, z2) ||
        !poly_eq(table3_catalog("bernoulli", 1).rhs, b2)) {
      r.pass = false;
      r.detail = "degree-2 anchors x^2 - 2/3 / x^2 - 8/3 mismatch";
    } else {
      r.detail = "degree-2 anchors";
    }
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"tables3/z_kernel_dual", true, ""};
    for (std::size_t n = 2; n <= 12 && r.pass; n += 2) {
      if (!poly_eq(z_kernel(n), z_kernel_closed_even(n / 2))) {
        r.pass = false;
        r.detail = "sum formula vs closed even form differ at n=" + std::to_string(n);
      }
    }
    if (r.pass) r.detail = "even n <= 12";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"tables3/even_part_dual", true, ""};
    std::uniform_int_distribution<std::size_t> mdist(1, opts.m_max);
    std::size_t count = std::max<std::size_t>(20, opts.pairs / 5);
    for (std::size_t i = 0; i < count && r.pass; ++i) {
      std::size_t m = mdist(rng);
      MonicPoly p = random_even(m, rng);
      MonicPoly q = random_even(m, rng);
      if (!poly_eq(halve(box_square(p, q)), commutator_even_part(p, q))) {
        r.pass = false;
        r.detail = "factorized route differs from halve(box_square) at 2m=" +
                   std::to_string(2 * m);
      }
    }
    if (r.pass) r.detail = std::to_string(count) + " random even pairs";
    rep.checks.push_back(std::move(r));
  }
  finalize(rep);
  return rep;
}

SuiteReport suite_thm216(const VerifyOptions& opts) {
  SuiteReport rep{"thm216", {}, 0, true};
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> ndist(1, 10);
  std::uniform_int_distribution<std::size_t> tdist(0, 2);

  {
    CheckResult r{"thm216/merge_law", true, ""};
    for (std::size_t i = 0; i < opts.bindings && r.pass; ++i) {
      std::size_t n = ndist(rng);
      HgpSpec s1{n, draw_tuple("any", tdist(rng), rng), draw_tuple("lower", tdist(rng), rng)};
      HgpSpec s2{n, draw_tuple("any", tdist(rng), rng), draw_tuple("lower", tdist(rng), rng)};
      MonicPoly merged = hgp(boxtimes_hgp_merge(s1, s2));
      if (!poly_eq(merged, boxtimes(hgp(s1), hgp(s2)))) {
        r.pass = false;
        r.detail = "merge law fails at n=" + std::to_string(n);
      }
    }
    if (r.pass) r.detail = std::to_string(opts.bindings) + " random bindings, n <= 10";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"thm216/even_merge", true, ""};
    std::uniform_int_distribution<std::size_t> mdist(1, opts.m_max);
    std::size_t count = std::max<std::size_t>(20, opts.bindings / 2);
    for (std::size_t i = 0; i < count && r.pass; ++i) {
      std::size_t m = mdist(rng);
      auto u1 = draw_tuple("any", tdist(rng), rng);
      auto l1 = draw_tuple("lower", tdist(rng), rng);
      auto u2 = draw_tuple("any", tdist(rng), rng);
      auto l2 = draw_tuple("lower", tdist(rng), rng);
      MonicPoly prod = boxtimes(hgp_even(m, u1, l1), hgp_even(m, u2, l2));
      std::vector<Rational> mu = u1, ml = l1;
      mu.insert(mu.end(), u2.begin(), u2.end());
      ml.insert(ml.end(), l2.begin(), l2.end());
      mu.push_back(Rational(-1) / Rational(2 * static_cast<long>(m)));
      ml.push_back(Rational(1) - Rational(1) / Rational(2 * static_cast<long>(m)));
      if (!poly_eq(prod, hgp_even(m, mu, ml))) {
        r.pass = false;
        r.detail = "even merge fails at m=" + std::to_string(m);
      }
    }
    if (r.pass) r.detail = std::to_string(count) + " random even bindings";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"thm216/cancellation", true, ""};
    std::size_t count = std::max<std::size_t>(20, opts.bindings / 2);
    for (std::size_t i = 0; i < count && r.pass; ++i) {
      std::size_t n = ndist(rng);
      Rational shared = sample_window("lower", 1, rng);
      Rational a = sample_window("lower", 1, rng);
      Rational b = sample_window("any", 1, rng);
      while (b == a) b = sample_window("any", 1, rng);  // a == b cancels too
      HgpSpec with{n, {b, shared}, {a, shared}};
      HgpSpec reduced = cancel_common_parameters(with);
      bool ok = poly_eq(hgp(with), hgp(reduced)) && reduced.upper == std::vector<Rational>{b} &&
                reduced.lower == std::vector<Rational>{a};
      HgpSpec twice{n, {shared, shared, b}, {shared}};
      HgpSpec reduced2 = cancel_common_parameters(twice);
      ok = ok && poly_eq(hgp(twice), hgp(reduced2)) && reduced2.lower.empty();
      if (!ok) {
        r.pass = false;
        r.detail = "cancellation fails at n=" + std::to_string(n);
      }
    }
    if (r.pass) r.detail = std::to_string(count) + " random bindings";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"thm216/zeros_on_one", true, ""};
    const std::vector<Rational> grid{Rational(3, 2), Rational(2), Rational(3)};
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 8 && r.pass; ++n) {
      for (std::size_t k = 0; k <= n && r.pass; ++k) {
        for (const Rational& b : grid) {
          ++count;
          if (!zeros_on_one_factorization_check(n, k, b)) {
            r.pass = false;
            r.detail = "factorization fails at n=" + std::to_string(n) +
                       ", r=" + std::to_string(k) + ", b=" + to_string(b);
            break;
          }
        }
      }
    }
    if (r.pass) r.detail = std::to_string(count) + " grid points, n <= 8";
    rep.checks.push_back(std::move(r));
  }
  finalize(rep);
  return rep;
}

SuiteReport suite_pairs(const std::string& name, const VerifyOptions& opts,
                        bool (*check)(const MonicPoly&, const MonicPoly&)) {
  SuiteReport rep{name, {}, 0, true};
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> mdist(1, opts.m_max);
  CheckResult r{name + "/random_even_pairs", true, ""};
  for (std::size_t i = 0; i < opts.pairs && r.pass; ++i) {
    std::size_t m = mdist(rng);
    MonicPoly p = random_even(m, rng);
    MonicPoly q = random_even(m, rng);
    if (!check(p, q)) {
      r.pass = false;
      r.detail = "identity fails at degree " + std::to_string(2 * m);
    }
  }
  if (r.pass) {
    r.detail = std::to_string(opts.pairs) + " random even pairs, degree <= " +
               std::to_string(2 * opts.m_max);
  }
  rep.checks.push_back(std::move(r));
  finalize(rep);
  return rep;
}

MomentSeq rho_even(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   std::size_t order) {
  return s_rational_even_moments({upper, lower}, order);
}

/// Solves lhs = Dil_t rhs for t^2 on even sequences and checks consistency of
/// that single scale across every order.
CheckResult solved_dilation_row(const std::string& name, const MomentSeq& lhs,
                                const MomentSeq& rhs,
                                const std::optional<Rational>& pinned_t2) {
  CheckResult r{name, true, ""};
  std::size_t order = std::min(lhs.order, rhs.order);
  std::optional<Rational> t2;
  for (std::size_t j = 1; 2 * j <= order; ++j) {
    if (rhs.m[2 * j] != 0) {
      if (lhs.m[2 * j] == 0) {
        r.pass = false;
        r.detail = "left side vanishes where right side does not (order " +
                   std::to_string(2 * j) + ")";
        return r;
      }
      t2 = lhs.m[2 * j] / rhs.m[2 * j];
      break;
    }
  }
  if (!t2) {
    r.pass = false;
    r.detail = "right side has no nonzero even moment";
    return r;
  }
  Rational scale(1);
  for (std::size_t j = 1; 2 * j <= order; ++j) {
    scale *= *t2;
    if (lhs.m[2 * j] != scale * rhs.m[2 * j]) {
      r.pass = false;
      r.detail = "solved dilation t^2=" + to_string(*t2) +
                 " is inconsistent at order " + std::to_string(2 * j);
      return r;
    }
  }
  r.detail = "solved t^2 = " + to_string(*t2) + ", consistent to order " + std::to_string(order);
  if (pinned_t2) {
    if (*t2 != *pinned_t2) {
      r.pass = false;
      r.detail += ", expected pinned t^2 = " + to_string(*pinned_t2);
    } else {
      r.detail += " (pinned)";
    }
  }
  return r;
}

SuiteReport suite_measures(const VerifyOptions& opts) {
  SuiteReport rep{"measures", {}, 0, true};
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  auto random_seq = [&](std::size_t order, bool even_only) {
    MomentSeq mu(order);
    for (std::size_t j = 1; j <= order; ++j) {
      if (even_only && j % 2 == 1) continue;
      Rational r(num(rng), den(rng));
      r.canonicalize();
      mu.m[j] = r;
    }
    return mu;
  };

  {
    CheckResult r{"measures/cumulant_round_trip", true, ""};
    for (std::size_t i = 0; i < 40 && r.pass; ++i) {
      MomentSeq mu = random_seq(12, false);
      if (!(cumulants_to_moments(moments_to_cumulants(mu)) == mu)) {
        r.pass = false;
        r.detail = "round trip failed";
      }
    }
    if (r.pass) r.detail = "40 random sequences, order 12";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/free_add_algebra", true, ""};
    for (std::size_t i = 0; i < 25 && r.pass; ++i) {
      MomentSeq a = random_seq(10, false), b = random_seq(10, false), c = random_seq(10, false);
      bool ok = free_add(a, b) == free_add(b, a) &&
                free_add(free_add(a, b), c) == free_add(a, free_add(b, c));
      if (!ok) {
        r.pass = false;
        r.detail = "commutativity/associativity failed";
      }
    }
    if (r.pass) r.detail = "25 random triples, order 10";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/q_sqrt_round_trip", true, ""};
    for (std::size_t i = 0; i < 25 && r.pass; ++i) {
      MomentSeq even = random_seq(24, true);
      MomentSeq any = random_seq(12, false);
      bool ok = sqrt_measure(q_measure(even)) == even && q_measure(sqrt_measure(any)) == any;
      if (!ok) {
        r.pass = false;
        r.detail = "q/sqrt round trip failed";
      }
    }
    if (r.pass) r.detail = "25 random sequences";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/empirical_q_consistency", true, ""};
    for (std::size_t m : {1, 2, 4, 8, 16, 32}) {
      MonicPoly p = random_even(m, rng);
      MomentSeq lifted(16, empirical_moments(p, 16));
      MomentSeq halved(8, empirical_moments(halve(p), 8));
      if (!(q_measure(lifted) == halved)) {
        r.pass = false;
        r.detail = "empirical pushforward mismatch at degree " + std::to_string(2 * m);
        break;
      }
    }
    if (r.pass) r.detail = "degrees 2..64";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/free_poisson_catalan", true, ""};
    std::vector<Rational> kappa(11, Rational(1));
    kappa[0] = 0;
    MomentSeq via_cumulants = cumulants_to_moments(kappa);
    MomentSeq via_srational = s_rational_moments({{Rational(1)}, {}}, 10);
    const long catalan[11] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    bool ok = via_cumulants == via_srational;
    for (std::size_t j = 0; j <= 10 && ok; ++j) ok = via_srational.m[j] == Rational(catalan[j]);
    r.pass = ok;
    r.detail = ok ? "cumulant route = S-rational route = Catalan, order 10"
                  : "Catalan anchor mismatch";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/semicircle_sqrt", true, ""};
    MomentSeq sc = rho_even({Rational(1)}, {}, 10);
    const long want[11] = {1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42};
    bool ok = true;
    for (std::size_t j = 0; j <= 10 && ok; ++j) ok = sc.m[j] == Rational(want[j]);
    MomentSeq mp = s_rational_moments({{Rational(1)}, {}}, 5);
    ok = ok && q_measure(sc) == mp;
    r.pass = ok;
    r.detail = ok ? "semicircle moments and q(semicircle) = free Poisson" : "anchor mismatch";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/arcsine_anchor", true, ""};
    MomentSeq arc = dilate_even_measure(rho_even({Rational(1)}, {Rational(2)}, 6), Rational(4));
    const long want[7] = {1, 0, 2, 0, 6, 0, 20};
    bool ok = true;
    for (std::size_t j = 0; j <= 6 && ok; ++j) ok = arc.m[j] == Rational(want[j]);
    r.pass = ok;
    r.detail = ok ? "central binomial moments to order 6" : "anchor mismatch";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/commutator_targets", true, ""};
    MomentSeq mp = s_rational_moments({{Rational(1)}, {}}, 4);
    MomentSeq sym_mp = sym_measure(mp);
    bool ok = sym_mp.m[2] == 2 && sym_mp.m[4] == 10;
    MomentSeq sc = rho_even({Rational(1)}, {}, 8);
    MomentSeq hr = sqrt_measure(dilate_measure(q_measure(sc), Rational(1, 2)));
    ok = ok && hr.m[2] == Rational(1, 2) && hr.m[4] == Rational(1, 2);
    r.pass = ok;
    r.detail = ok ? "sym(MP): m2=2, m4=10; projected: m2=m4=1/2" : "target mismatch";
    rep.checks.push_back(std::move(r));
  }

  // Even sum rows in the infinite limit, exact to order 10.
  const std::size_t N = 10;
  {
    CheckResult r{"measures/limit_bessel_sum", true, ""};
    const std::pair<Rational, Rational> draws[2] = {{Rational(-1), Rational(-2)},
                                                    {Rational(-3, 2), Rational(-5, 2)}};
    for (const auto& [a1, a2] : draws) {
      Rational s = a1 + a2;
      MomentSeq lhs = free_add(rho_even({Rational(1)}, {a1}, N), rho_even({Rational(1)}, {a2}, N));
      MomentSeq rhs = dilate_even_measure(
          rho_even({s / 2, s / 2, Rational(1)}, {a1, a2, s}, N), Rational(4));
      if (!(lhs == rhs)) {
        r.pass = false;
        r.detail = "fails at a1=" + to_string(a1) + ", a2=" + to_string(a2);
        break;
      }
    }
    if (r.pass) r.detail = "exact to order 10";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/limit_semicircle_stability", true, ""};
    MomentSeq sc = rho_even({Rational(1)}, {}, N);
    const std::pair<Rational, Rational> draws[2] = {{Rational(1), Rational(2)},
                                                    {Rational(1, 2), Rational(3)}};
    for (const auto& [c1, c2] : draws) {
      MomentSeq lhs = free_add(dilate_even_measure(sc, c1), dilate_even_measure(sc, c2));
      if (!(lhs == dilate_even_measure(sc, c1 + c2))) {
        r.pass = false;
        r.detail = "fails at c1=" + to_string(c1) + ", c2=" + to_string(c2);
        break;
      }
    }
    if (r.pass) r.detail = "exact to order 10";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/limit_laguerre_sum", true, ""};
    const std::pair<Rational, Rational> draws[2] = {{Rational(1), Rational(2)},
                                                    {Rational(1, 2), Rational(5, 3)}};
    for (const auto& [b1, b2] : draws) {
      MomentSeq lhs = free_add(rho_even({b1, Rational(1)}, {}, N),
                               rho_even({b2, Rational(1)}, {}, N));
      if (!(lhs == rho_even({b1 + b2, Rational(1)}, {}, N))) {
        r.pass = false;
        r.detail = "fails at b1=" + to_string(b1) + ", b2=" + to_string(b2);
        break;
      }
    }
    if (r.pass) r.detail = "exact to order 10";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/limit_jacobi_sum", true, ""};
    const std::array<Rational, 3> draws[2] = {{Rational(3), Rational(1, 2), Rational(1)},
                                              {Rational(4), Rational(2, 3), Rational(3, 2)}};
    for (const auto& [a, b1, b2] : draws) {
      MomentSeq lhs1 = rho_even({b1 + b2 - a, Rational(1)}, {}, N);
      MomentSeq lhs2 = rho_even({a - b1, a - b2, Rational(1)}, {a}, N);
      if (!(free_add(lhs1, lhs2) == rho_even({b1, b2, Rational(1)}, {a}, N))) {
        r.pass = false;
        r.detail = "fails at a=" + to_string(a);
        break;
      }
    }
    if (r.pass) r.detail = "exact to order 10";
    rep.checks.push_back(std::move(r));
  }
  {
    CheckResult r{"measures/limit_squared_sum", true, ""};
    const std::pair<Rational, Rational> draws[2] = {{Rational(1), Rational(2)},
                                                    {Rational(3, 2), Rational(1, 2)}};
    for (const auto& [b1, b2] : draws) {
      MomentSeq half = rho_even({b1, b2, Rational(1)}, {b1 + b2}, N);
      MomentSeq rhs = rho_even({2 * b1, 2 * b2, Rational(1)}, {2 * (b1 + b2)}, N);
      if (!(free_add(half, half) == rhs)) {
        r.pass = false;
        r.detail = "fails at b1=" + to_string(b1) + ", b2=" + to_string(b2);
        break;
      }
    }
    if (r.pass) r.detail = "exact to order 10";
    rep.checks.push_back(std::move(r));
  }

  // Symmetrized S-rational limits: one free dilation solved from the data,
  // then required to be consistent across all orders.
  {
    Rational b(1);
    MomentSeq lhs = sym_measure(s_rational_moments({{b}, {}}, N));
    MomentSeq rhs = rho_even({2 * b, Rational(1)}, {}, N);
    rep.checks.push_back(
        solved_dilation_row("measures/sym_mp", lhs, rhs, Rational(1)));
    Rational b2(2);
    MomentSeq lhs2 = sym_measure(s_rational_moments({{b2}, {}}, N));
    MomentSeq rhs2 = rho_even({2 * b2, Rational(1)}, {}, N);
    rep.checks.push_back(solved_dilation_row("measures/sym_mp_alt", lhs2, rhs2, std::nullopt));
  }
  {
    Rational a(-1);
    MomentSeq lhs = sym_measure(s_rational_moments({{}, {a}}, N));
    MomentSeq rhs = rho_even({Rational(1)}, {2 * a, a, a}, N);
    rep.checks.push_back(solved_dilation_row("measures/sym_rmp", lhs, rhs, std::nullopt));
  }
  {
    Rational a(3), b(1, 2);
    MomentSeq lhs = sym_measure(s_rational_moments({{b}, {a}}, N));
    MomentSeq rhs = rho_even({Rational(1), 2 * b, 2 * a - 2 * b}, {2 * a, a, a}, N);
    rep.checks.push_back(solved_dilation_row("measures/sym_beta", lhs, rhs, std::nullopt));
  }
  {
    Rational b(1), d(2);
    MomentSeq lhs = sym_measure(s_rational_moments({{b, d}, {}}, N));
    MomentSeq rhs = rho_even({Rational(1), 2 * b, 2 * d, b + d, b + d}, {2 * (b + d)}, N);
    rep.checks.push_back(solved_dilation_row("measures/sym_mp_product", lhs, rhs, std::nullopt));
  }
  {
    Rational a(-1), c(-2);
    MomentSeq lhs = sym_measure(s_rational_moments({{}, {a, c}}, N));
    Rational t = Rational(2, 3) * (a + c);
    MomentSeq rhs = rho_even({t, t, t, Rational(1)},
                             {2 * a, 2 * c, a, c, a, c, a + c, a + c}, N);
    rep.checks.push_back(solved_dilation_row("measures/sym_rmp_product", lhs, rhs, std::nullopt));
  }

  finalize(rep);
  return rep;
}

SuiteReport suite_all(const VerifyOptions& opts) {
  SuiteReport rep{"all", {}, 0, true};
  for (const char* tok : {"tables1", "tables2", "tables3", "thm216", "prop38", "prop312",
                          "measures"}) {
    SuiteReport sub = run_suite(tok, opts);
    rep.skipped += sub.skipped;
    for (auto& c : sub.checks) rep.checks.push_back(std::move(c));
  }
  finalize(rep);
  return rep;
}

}  // namespace

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

std::vector<std::string> verify_suites() {
  return {"tables1", "tables2", "tables3", "thm216", "prop38", "prop312", "measures", "all"};
}

std::string canonical_suite(const std::string& token) {
  if (token == "merge-law") return "thm216";
  if (token == "even-mul") return "prop38";
  if (token == "even-add") return "prop312";
  for (const auto& t : verify_suites()) {
    if (token == t) return t;
  }
  fail(errc::parse_error, "unknown verify suite " + token);
}

Rational eval_expr(const ParamExpr& expr, std::size_t m, const Bindings& b) {
  require(m >= 1, errc::invalid_parameter, "half-degree m must be positive");
  Rational out(0);
  const Rational inv_m(1, static_cast<unsigned long>(m));
  for (const auto& [key, coeff] : expr.terms) {
    if (key == "1") {
      out += coeff;
    } else if (key == "1/m") {
      out += coeff * inv_m;
    } else if (key == "1/m2") {
      out += coeff * inv_m * inv_m;
    } else {
      auto it = b.find(key);
      require(it != b.end(), errc::parse_error, "unbound symbol " + key + " in expression");
      out += coeff * it->second;
    }
  }
  return out;
}

std::vector<Rational> eval_exprs(const std::vector<ParamExpr>& exprs, std::size_t m,
                                 const Bindings& b) {
  std::vector<Rational> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(eval_expr(e, m, b));
  return out;
}

std::string fixture_dir_or_default(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("FINFREE_FIXTURE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return FINFREE_FIXTURE_DIR;
}

std::vector<ProductIdentityFixture> load_product_identities(const std::string& dir) {
  json j = load_json_file(fixture_dir_or_default(dir) + "/product_identities.json");
  std::vector<ProductIdentityFixture> out;
  for (const auto& item : j.at("identities")) {
    ProductIdentityFixture fx;
    fx.name = item.at("name").get<std::string>();
    fx.kind = item.at("kind").get<std::string>();
    fx.symbols = symbols_from_json(item.at("symbols"));
    fx.p1 = fds_from_json(item.at("p1"));
    fx.p2 = fds_from_json(item.at("p2"));
    fx.p3 = fds_from_json(item.at("p3"));
    out.push_back(std::move(fx));
  }
  return out;
}

std::vector<SymRowFixture> load_table1_rows(const std::string& dir) {
  json j = load_json_file(fixture_dir_or_default(dir) + "/tables1.json");
  std::vector<SymRowFixture> out;
  for (const auto& item : j.at("rows")) {
    SymRowFixture row;
    row.name = item.at("name").get<std::string>();
    row.symbols = symbols_from_json(item.at("symbols"));
    row.lhs_upper = exprs_from_json(item.at("lhs").at("upper"));
    row.lhs_lower = exprs_from_json(item.at("lhs").at("lower"));
    const auto& rhs = item.at("rhs");
    row.dil_kind = rhs.at("dilation").at("kind").get<std::string>();
    row.dil_value = expr_from_json(rhs.at("dilation").at("value"));
    row.rhs_upper = exprs_from_json(rhs.at("upper"));
    row.rhs_lower = exprs_from_json(rhs.at("lower"));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<SumRowFixture> load_table2_rows(const std::string& dir) {
  json j = load_json_file(fixture_dir_or_default(dir) + "/tables2.json");
  std::vector<SumRowFixture> out;
  for (const auto& item : j.at("rows")) {
    SumRowFixture row;
    row.name = item.at("name").get<std::string>();
    row.symbols = symbols_from_json(item.at("symbols"));
    row.lhs1 = side_from_json(item.at("lhs1"));
    row.lhs2 = side_from_json(item.at("lhs2"));
    row.rhs = side_from_json(item.at("rhs"));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<CatalogRowFixture> load_table3_rows(const std::string& dir) {
  json j = load_json_file(fixture_dir_or_default(dir) + "/tables3.json");
  std::vector<CatalogRowFixture> out;
  for (const auto& item : j.at("rows")) {
    out.push_back({item.at("name").get<std::string>(), symbols_from_json(item.at("symbols"))});
  }
  return out;
}

bool verify_product_identity(const ProductIdentityFixture& fx, std::size_t m, const Bindings& b) {
  MonicPoly p1 = instantiate_fds(fx.p1, m, b);
  MonicPoly p2 = instantiate_fds(fx.p2, m, b);
  MonicPoly p3 = instantiate_fds(fx.p3, m, b);
  return poly_eq(boxplus(p1, p2), p3);
}

bool verify_symmetrization_row(const SymRowFixture& row, std::size_t m, const Bindings& b) {
  MonicPoly lhs = symmetrize(
      hgp({2 * m, eval_exprs(row.lhs_upper, m, b), eval_exprs(row.lhs_lower, m, b)}));
  Rational v = eval_expr(row.dil_value, m, b);
  DilationScale scale = row.dil_kind == "imaginary_rational"
                            ? DilationScale::imaginary_rational(v)
                            : DilationScale::sqrt_rational(v);
  MonicPoly rhs = dilate(hgp_even(m, eval_exprs(row.rhs_upper, m, b),
                                  eval_exprs(row.rhs_lower, m, b)),
                         scale);
  return poly_eq(lhs, rhs);
}

bool verify_even_sum_row(const SumRowFixture& row, std::size_t m, const Bindings& b) {
  MonicPoly lhs = boxplus(instantiate_side(row.lhs1, m, b), instantiate_side(row.lhs2, m, b));
  return poly_eq(lhs, instantiate_side(row.rhs, m, b));
}

Rational sample_window(const std::string& window, std::size_t m, std::mt19937_64& rng) {
  if (window == "rank") {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(2 * m));
    return Rational(dist(rng));
  }
  const auto& pool = window_pool(window);
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

SuiteReport run_suite(const std::string& token, const VerifyOptions& opts) {
  const std::string suite = canonical_suite(token);
  if (suite == "tables1") return suite_tables1(opts);
  if (suite == "tables2") return suite_tables2(opts);
  if (suite == "tables3") return suite_tables3(opts);
  if (suite == "thm216") return suite_thm216(opts);
  if (suite == "prop38") return suite_pairs("prop38", opts, &halve_boxtimes_identity_check);
  if (suite == "prop312") return suite_pairs("prop312", opts, &halve_boxplus_identity_check);
  if (suite == "measures") return suite_measures(opts);
  return suite_all(opts);
}

std::string report_to_text(const SuiteReport& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
  out << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size()
      << " checks passed, " << rep.skipped << " draws skipped\n";
  return out.str();
}

std::string report_to_json(const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["suite"] = rep.suite;
  j["pass"] = rep.pass;
  j["skipped_draws"] = rep.skipped;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return j.dump(2);
}

}  // namespace finfree
