#include "finfree/commutator.hpp"

#include "finfree/conv.hpp"
#include "finfree/hgp.hpp"
#include "finfree/roots.hpp"
#include "json.hpp"

namespace finfree {

MonicPoly box_square(const MonicPoly& p, const MonicPoly& q) {
  require(p.degree() == q.degree(), errc::degree_mismatch,
          "operands have degrees " + std::to_string(p.degree()) + " and " +
              std::to_string(q.degree()));
  return boxtimes(boxtimes(symmetrize(p), symmetrize(q)), z_kernel(p.degree()));
}

namespace {

MonicPoly even_part_kernel(std::size_t m) {
  Rational half_m(1, 2 * static_cast<long>(m));
  Rational inv_m(1, static_cast<long>(m));
  MonicPoly h = hgp(HgpSpec{m, {Rational(2), Rational(2)},
                            {Rational(1) - half_m, Rational(2) + inv_m}});
  return dilate(h, DilationScale::rational(Rational(1, 4)));
}

}  // namespace

MonicPoly commutator_even_part(const MonicPoly& p, const MonicPoly& q) {
  require(p.degree() % 2 == 0, errc::odd_degree, "even part needs an even degree");
  require(p.degree() == q.degree(), errc::degree_mismatch,
          "operands have degrees " + std::to_string(p.degree()) + " and " +
              std::to_string(q.degree()));
  std::size_t m = p.degree() / 2;
  MonicPoly qp = halve(symmetrize(p));
  MonicPoly qq = halve(symmetrize(q));
  return boxtimes(boxtimes(qp, qq), even_part_kernel(m));
}

HypothesisCheck check_hypothesis_58(const MonicPoly& q) {
  require(q.degree() % 2 == 0, errc::odd_degree, "criterion needs an even degree");
  std::size_t m = q.degree() / 2;
  MonicPoly h = halve(symmetrize(q));
  Rational half_m(1, 2 * static_cast<long>(m));
  MonicPoly hermite_half = hgp(HgpSpec{m, {Rational(1) - half_m}, {}});
  HypothesisCheck out;
  MonicPoly r = x_power(1);
  try {
    r = boxtimes_divide(h, hermite_half);
  } catch (const Error& err) {
    out.holds = false;
    out.reason = std::string("factorization failed: ") + err.what();
    return out;
  }
  RootCertificate cert = sturm_certificate(r);
  if (all_roots_real_nonnegative(cert)) {
    out.holds = true;
    out.witness = r;
  } else {
    out.reason = "candidate factor is not nonnegative-rooted (" +
                 std::to_string(cert.total_real_with_multiplicity) + "/" +
                 std::to_string(cert.degree) + " real, " +
                 std::to_string(cert.count_negative) + " negative)";
  }
  return out;
}

CommutatorReport commutator_report(const MonicPoly& p, const MonicPoly& q) {
  CommutatorReport rep;
  rep.result = box_square(p, q);
  rep.real_rooted = all_roots_real(sturm_certificate(rep.result));
  if (p.degree() % 2 == 0) {
    HypothesisCheck on_q = check_hypothesis_58(q);
    if (on_q.holds) {
      rep.hypothesis_58 = on_q;
      rep.hypothesis_argument = "q";
      return rep;
    }
    HypothesisCheck on_p = check_hypothesis_58(p);
    if (on_p.holds) {
      rep.hypothesis_58 = on_p;
      rep.hypothesis_argument = "p";
      return rep;
    }
    rep.hypothesis_58 = on_q;
    rep.hypothesis_58.reason = "on q: " + on_q.reason + "; on p: " + on_p.reason;
  } else {
    rep.hypothesis_58.reason = "criterion is stated for even degrees only";
  }
  return rep;
}

std::string commutator_report_to_json(const CommutatorReport& r) {
  nlohmann::ordered_json j;
  j["result"] = nlohmann::ordered_json::parse(poly_to_json(r.result));
  j["real_rooted"] = r.real_rooted;
  nlohmann::ordered_json h;
  h["holds"] = r.hypothesis_58.holds;
  if (r.hypothesis_58.holds) {
    h["argument"] = r.hypothesis_argument;
    h["witness"] = nlohmann::ordered_json::parse(poly_to_json(*r.hypothesis_58.witness));
  } else {
    h["reason"] = r.hypothesis_58.reason;
  }
  j["hypothesis_58"] = h;
  return j.dump();
}

namespace {

Rational frac(long num, long den) { return Rational(num, den); }

}  // namespace

std::vector<std::string> table3_rows() {
  return {"hermite", "hermite_projection", "laguerre", "bessel",
          "projection", "bernoulli", "jacobi"};
}

CatalogPair table3_catalog(const std::string& row, std::size_t m,
                           const std::vector<Rational>& params) {
  require(m >= 1, errc::invalid_parameter, "half-degree m must be at least 1");
  std::size_t n = 2 * m;
  long lm = static_cast<long>(m);
  Rational half_m = frac(1, 2 * lm);
  Rational inv_m = frac(1, lm);
  Rational one(1), two(2);

  auto want = [&](std::size_t k, std::vector<Rational> defaults) {
    if (params.empty()) return defaults;
    require(params.size() == k, errc::invalid_parameter,
            "row '" + row + "' takes " + std::to_string(k) + " parameter(s)");
    return params;
  };

  if (row == "hermite") {
    want(0, {});
    MonicPoly h = hermite(n);
    MonicPoly rhs = dilate(hgp_even(m, {one - half_m, two, two}, {two + inv_m}),
                           DilationScale::rational(inv_m));
    return {box_square(h, h), rhs};
  }
  if (row == "hermite_projection") {
    want(0, {});
    MonicPoly lhs = box_square(hermite(n), projection(n, m));
    MonicPoly rhs = dilate(hgp_even(m, {one, two}, {two + inv_m}),
                           DilationScale::sqrt_rational(frac(1, 2 * lm)));
    return {lhs, rhs};
  }
  if (row == "laguerre") {
    auto pr = want(2, {Rational(1), Rational(2)});
    MonicPoly lhs = box_square(laguerre_scaled(n, pr[0]), laguerre_scaled(n, pr[1]));
    MonicPoly rhs = dilate(
        hgp_even(m, {two * pr[0], two * pr[1], two, two, one - half_m}, {two + inv_m}),
        DilationScale::rational(frac(1, 2 * lm * lm)));
    return {lhs, rhs};
  }
  if (row == "bessel") {
    auto pr = want(2, {Rational(-1), Rational(-2)});
    const Rational &a = pr[0], &b = pr[1];
    MonicPoly lhs = box_square(bessel(n, a), bessel(n, b));
    MonicPoly rhs = dilate(
        hgp_even(m, {one - half_m, two, two},
                 {two * a, a, a - half_m, two * b, b, b - half_m, two + inv_m}),
        DilationScale::rational(frac(2 * lm * lm, 1)));
    return {lhs, rhs};
  }
  if (row == "projection") {
    auto pr = want(2, {Rational(lm), Rational(lm)});
    require(is_integer(pr[0]) && is_integer(pr[1]) && pr[0] >= 0 && pr[1] >= 0 &&
                pr[0] <= Rational(static_cast<long>(n)) && pr[1] <= Rational(static_cast<long>(n)),
            errc::invalid_parameter, "projection ranks must be integers in [0, 2m]");
    Rational r = pr[0], s = pr[1];
    auto rank = [](const Rational& x) { return static_cast<std::size_t>(x.get_num().get_si()); };
    MonicPoly lhs = box_square(projection(n, rank(r)), projection(n, rank(s)));
    MonicPoly rhs = dilate(hgp_even(m, {r * inv_m, two - r * inv_m, s * inv_m, two - s * inv_m},
                                    {one, one, one - half_m, two + inv_m}),
                           DilationScale::rational(frac(1, 2)));
    return {lhs, rhs};
  }
  if (row == "bernoulli") {
    want(0, {});
    MonicPoly b = bernoulli(n);
    MonicPoly rhs = dilate(hgp_even(m, {one, one}, {one - half_m, two + inv_m}),
                           DilationScale::rational(two));
    return {box_square(b, b), rhs};
  }
  if (row == "jacobi") {
    auto pr = want(4, {Rational(2), Rational(1), Rational(2), Rational(1)});
    const Rational &a = pr[0], &b = pr[1], &c = pr[2], &d = pr[3];
    MonicPoly lhs = box_square(jacobi(n, a, b), jacobi(n, c, d));
    MonicPoly rhs = dilate(
        hgp_even(m, {two * b, two * a - two * b, two * d, two * c - two * d, two, two, one - half_m},
                 {two * a, a, a - half_m, two * c, c, c - half_m, two + inv_m}),
        DilationScale::rational(frac(1, 2)));
    return {lhs, rhs};
  }
  fail(errc::invalid_parameter, "unknown catalog row '" + row + "'");
}

}  // namespace finfree
