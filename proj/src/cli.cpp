#include "finfree/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "finfree/commutator.hpp"
#include "finfree/conv.hpp"
#include "finfree/errors.hpp"
#include "finfree/hgp.hpp"
#include "finfree/measures.hpp"
#include "finfree/poly.hpp"
#include "finfree/rmt.hpp"
#include "finfree/roots.hpp"
#include "finfree/series.hpp"
#include "finfree/verify.hpp"

namespace finfree {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonicPoly read_poly(const std::string& path) { return poly_from_json(read_file(path)); }

/// Comma-separated rationals; an empty or all-space string is the empty tuple.
std::vector<Rational> parse_tuple(const std::string& text) {
  std::vector<Rational> out;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed.empty()) return out;
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  if (!trimmed.empty() && trimmed.back() == ',') {
    fail(errc::parse_error, "trailing comma in tuple " + text);
  }
  return out;
}

std::size_t env_series_order() {
  if (const char* env = std::getenv("FINFREE_SERIES_ORDER"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    require(end != nullptr && *end == '\0' && v >= 1, errc::parse_error,
            "FINFREE_SERIES_ORDER must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultSeriesOrder;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(out_path);
  require(f.good(), errc::parse_error, "cannot write " + out_path);
  f << text;
  if (text.empty() || text.back() != '\n') f << "\n";
}

/// Default validation anchors per word: diagonal spectra whose exact word
/// polynomial is known in closed form.
MonicPoly default_anchor(Word w) {
  if (w == Word::commutator) {
    return MonicPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1, 2)});
  }
  return MonicPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
}

MonicPoly exact_word_poly(Word w, const MonicPoly& p, const MonicPoly& q) {
  switch (w) {
    case Word::sum:
      return boxplus(p, q);
    case Word::product:
      return boxtimes(p, q);
    case Word::commutator:
      return box_square(p, q);
  }
  fail(errc::invalid_parameter, "unknown word");
}

std::vector<double> real_spectrum(const MonicPoly& p) {
  NumericRootSet rs = numeric_roots(p);
  std::vector<double> diag;
  diag.reserve(rs.roots.size());
  for (const auto& z : rs.roots) diag.push_back(z.real());
  return diag;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact finite free convolutions, even hypergeometric polynomials, and "
               "commutator identities"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write the result to a file instead of stdout");

  struct BinOp {
    const char* name;
    const char* help;
    MonicPoly (*fn)(const MonicPoly&, const MonicPoly&);
  };
  const BinOp binops[] = {
      {"conv-add", "additive finite free convolution of two equal-degree inputs", &boxplus},
      {"conv-mul", "multiplicative finite free convolution", &boxtimes},
  };

  std::string result;

  for (const auto& op : binops) {
    auto* sub = app.add_subcommand(op.name, op.help);
    auto p_path = std::make_shared<std::string>();
    auto q_path = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "left input polynomial (JSON file)")->required();
    sub->add_option("q", *q_path, "right input polynomial (JSON file)")->required();
    auto fn = op.fn;
    sub->callback([&result, p_path, q_path, fn] {
      result = poly_to_json(fn(read_poly(*p_path), read_poly(*q_path)));
    });
  }
  {
    auto* sub = app.add_subcommand("conv-rect", "rectangular additive convolution");
    auto p_path = std::make_shared<std::string>();
    auto q_path = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "left input polynomial (JSON file)")->required();
    sub->add_option("q", *q_path, "right input polynomial (JSON file)")->required();
    sub->add_option("--alpha", *alpha, "aspect parameter (rational)")->required();
    sub->callback([&result, p_path, q_path, alpha] {
      result = poly_to_json(
          rect_boxplus(read_poly(*p_path), read_poly(*q_path), parse_rational(*alpha)));
    });
  }
  {
    auto* sub = app.add_subcommand("commutator",
                                   "commutator polynomial with real-rootedness report");
    auto p_path = std::make_shared<std::string>();
    auto q_path = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "left input polynomial (JSON file)")->required();
    sub->add_option("q", *q_path, "right input polynomial (JSON file)")->required();
    sub->callback([&result, p_path, q_path] {
      result = commutator_report_to_json(commutator_report(read_poly(*p_path),
                                                           read_poly(*q_path)));
    });
  }

  struct UnOp {
    const char* name;
    const char* help;
    MonicPoly (*fn)(const MonicPoly&);
  };
  const UnOp unops[] = {
      {"sym", "symmetrization p boxplus Dil_{-1} p", &symmetrize},
      {"halve", "half-degree part of an even polynomial", &halve},
      {"double", "even double of a polynomial", &double_poly},
  };
  for (const auto& op : unops) {
    auto* sub = app.add_subcommand(op.name, op.help);
    auto p_path = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "input polynomial (JSON file)")->required();
    auto fn = op.fn;
    sub->callback([&result, p_path, fn] { result = poly_to_json(fn(read_poly(*p_path))); });
  }

  {
    auto* sub = app.add_subcommand("hgp", "hypergeometric polynomial from parameter tuples");
    auto degree = std::make_shared<std::size_t>(0);
    auto upper = std::make_shared<std::string>();
    auto lower = std::make_shared<std::string>();
    auto even = std::make_shared<bool>(false);
    sub->add_option("--degree", *degree, "polynomial degree (half-degree with --even)")
        ->required();
    sub->add_option("--upper", *upper, "comma-separated upper parameters (empty for none)");
    sub->add_option("--lower", *lower, "comma-separated lower parameters (empty for none)");
    sub->add_flag("--even", *even, "build the even polynomial of degree 2*degree");
    sub->callback([&result, degree, upper, lower, even] {
      std::vector<Rational> up = parse_tuple(*upper);
      std::vector<Rational> lo = parse_tuple(*lower);
      MonicPoly p = *even ? hgp_even(*degree, up, lo) : hgp({*degree, up, lo});
      result = poly_to_json(p);
    });
  }
  {
    auto* sub = app.add_subcommand("family", "named classical family");
    auto name = std::make_shared<std::string>();
    auto degree = std::make_shared<std::size_t>(0);
    auto params = std::make_shared<std::string>();
    sub->add_option("--name", *name,
                    "laguerre | laguerre_scaled | hermite | bessel | jacobi | projection | "
                    "bernoulli")
        ->required();
    sub->add_option("--degree", *degree, "polynomial degree")->required();
    sub->add_option("--params", *params, "comma-separated family parameters");
    sub->callback([&result, name, degree, params] {
      result = poly_to_json(family(*name, *degree, parse_tuple(*params)));
    });
  }
  {
    auto* sub = app.add_subcommand("certify",
                                   "exact root census (Sturm) of a rational polynomial");
    auto p_path = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "input polynomial (JSON file)")->required();
    sub->callback([&result, p_path] {
      result = certificate_to_json(sturm_certificate(read_poly(*p_path)));
    });
  }
  {
    auto* sub = app.add_subcommand("roots", "numeric roots as CSV");
    auto p_path = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "input polynomial (JSON file)")->required();
    sub->callback([&result, p_path] { result = roots_to_csv(numeric_roots(read_poly(*p_path))); });
  }
  {
    auto* sub = app.add_subcommand("moments", "empirical root moments of a polynomial");
    auto p_path = std::make_shared<std::string>();
    auto order = std::make_shared<std::size_t>(0);
    sub->add_option("p", *p_path, "input polynomial (JSON file)")->required();
    sub->add_option("--order", *order, "truncation order (default: FINFREE_SERIES_ORDER or 12)");
    sub->callback([&result, p_path, order] {
      std::size_t k = *order > 0 ? *order : env_series_order();
      MonicPoly p = read_poly(*p_path);
      result = moments_to_json(MomentSeq(k, empirical_moments(p, k)));
    });
  }
  {
    auto* sub = app.add_subcommand("srational-moments",
                                   "moments of the S-rational measure with the given tuples");
    auto upper = std::make_shared<std::string>();
    auto lower = std::make_shared<std::string>();
    auto order = std::make_shared<std::size_t>(0);
    auto even = std::make_shared<bool>(false);
    sub->add_option("--upper", *upper, "comma-separated upper parameters");
    sub->add_option("--lower", *lower, "comma-separated lower parameters");
    sub->add_option("--order", *order, "truncation order (default: FINFREE_SERIES_ORDER or 12)");
    sub->add_flag("--even", *even, "symmetric square-root lift of the measure");
    sub->callback([&result, upper, lower, order, even] {
      std::size_t k = *order > 0 ? *order : env_series_order();
      SRationalSpec spec{parse_tuple(*upper), parse_tuple(*lower)};
      MomentSeq mu = *even ? s_rational_even_moments(spec, k) : s_rational_moments(spec, k);
      result = moments_to_json(mu);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "limit-compare", "empirical moments of a polynomial sequence against a limit law");
    auto upper = std::make_shared<std::string>();
    auto lower = std::make_shared<std::string>();
    auto order = std::make_shared<std::size_t>(0);
    auto even = std::make_shared<bool>(false);
    auto files = std::make_shared<std::vector<std::string>>();
    sub->add_option("--target-upper", *upper, "upper parameters of the S-rational target");
    sub->add_option("--target-lower", *lower, "lower parameters of the S-rational target");
    sub->add_option("--order", *order, "moment order (default: FINFREE_SERIES_ORDER or 12)");
    sub->add_flag("--even", *even, "use the even lift of the target");
    sub->add_option("polys", *files, "polynomial JSON files, ordered by degree")->required();
    sub->callback([&result, upper, lower, order, even, files] {
      std::size_t k = *order > 0 ? *order : env_series_order();
      SRationalSpec spec{parse_tuple(*upper), parse_tuple(*lower)};
      MomentSeq target = *even ? s_rational_even_moments(spec, k) : s_rational_moments(spec, k);
      std::vector<MonicPoly> seq;
      seq.reserve(files->size());
      for (const auto& f : *files) seq.push_back(read_poly(f));
      result = limit_compare_to_csv(limit_compare(seq, target, k));
    });
  }

  int exit_code = 0;
  {
    auto* sub = app.add_subcommand("verify", "run an identity suite and report each check");
    auto suite = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("--suite", *suite,
                    "tables1 | tables2 | tables3 | thm216 (merge-law) | prop38 (even-mul) | "
                    "prop312 (even-add) | measures | all")
        ->required();
    CLI::Option* seed_opt = sub->add_option("--seed", *seed,
                                            "override the deterministic suite seed");
    sub->add_flag("--json", *as_json, "emit the report as JSON");
    sub->callback([&result, &exit_code, &err, suite, seed, seed_opt, as_json] {
      VerifyOptions opts;
      if (seed_opt->count() > 0) opts.seed = *seed;
      SuiteReport rep = run_suite(*suite, opts);
      result = *as_json ? report_to_json(rep) : report_to_text(rep);
      if (!rep.pass) {
        exit_code = 1;
        if (const CheckResult* f = rep.first_failure()) {
          err << "verification failed: " << f->name << "\n";
        }
      }
    });
  }
  {
    auto* sub = app.add_subcommand(
        "rmt-validate", "Monte Carlo unitary-conjugation check of an exact word polynomial");
    auto word_name = std::make_shared<std::string>();
    auto trials = std::make_shared<std::size_t>(20000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto p_path = std::make_shared<std::string>();
    auto q_path = std::make_shared<std::string>();
    auto exact_path = std::make_shared<std::string>();
    auto z = std::make_shared<double>(4.0);
    sub->add_option("--word", *word_name, "sum | product | commutator")->required();
    sub->add_option("--trials", *trials, "Monte Carlo trials (>= 1000)")
        ->capture_default_str();
    sub->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    sub->add_option("--p", *p_path, "left spectrum polynomial (JSON file)");
    sub->add_option("--q", *q_path, "right spectrum polynomial (JSON file)");
    sub->add_option("--exact", *exact_path,
                    "override the exact prediction (for negative controls)");
    sub->add_option("--z", *z, "z-score threshold")->capture_default_str();
    sub->callback([&result, &exit_code, &err, word_name, trials, seed, p_path, q_path,
                   exact_path, z] {
      Word w = word_from_string(*word_name);
      MonicPoly p = p_path->empty() ? default_anchor(w) : read_poly(*p_path);
      MonicPoly q = q_path->empty() ? default_anchor(w) : read_poly(*q_path);
      MonicPoly exact = exact_path->empty() ? exact_word_poly(w, p, q) : read_poly(*exact_path);
      McEstimate est =
          mc_expected_charpoly(real_spectrum(p), real_spectrum(q), w, *trials, *seed);
      result = mc_report_json(est, exact, w, *z);
      if (!mc_compare(est, exact, *z).pass) {
        exit_code = 1;
        err << "verification failed: rmt/" << word_to_string(w) << "\n";
      }
    });
  }

  try {
    std::vector<const char*> argv;
    argv.push_back("finfree");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  emit(result, out_path, out);
  return exit_code;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cli_run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace finfree
