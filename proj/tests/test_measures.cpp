#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "finfree/errors.hpp"
#include "finfree/hgp.hpp"
#include "finfree/measures.hpp"
#include "finfree/poly.hpp"
#include "finfree/series.hpp"

using namespace finfree;

namespace {

/// Independent cumulant extraction through the R-transform: revert the Cauchy
/// transform g(u) = u + m_1 u^2 + ..., take K(z) = 1/g^{<-1>}(z), and read
/// kappa_n off K(z) - 1/z. Shares no code path with the moment recursion.
std::vector<Rational> r_transform_cumulants(const MomentSeq& mu) {
  std::size_t N = mu.order;
  TruncatedSeries g(N + 1);
  for (std::size_t j = 0; j <= N; ++j) g.c[j + 1] = mu.m[j];
  TruncatedSeries h = series_revert(g);
  std::vector<Rational> w(N + 1);
  for (std::size_t j = 0; j <= N; ++j) w[j] = h.c[j + 1];
  std::vector<Rational> v(N + 1, Rational(0));
  v[0] = 1;  // w[0] = 1 because the reverted series is again monic in z
  for (std::size_t j = 1; j <= N; ++j) {
    Rational acc(0);
    for (std::size_t i = 1; i <= j; ++i) acc += w[i] * v[j - i];
    v[j] = -acc;
  }
  std::vector<Rational> kappa(N + 1, Rational(0));
  for (std::size_t n = 1; n <= N; ++n) kappa[n] = v[n];
  return kappa;
}

MomentSeq catalan_seq(std::size_t order) {
  std::vector<Rational> c{Rational(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) acc += c[i] * c[n - 1 - i];
    c.push_back(acc);
  }
  return MomentSeq(order, c);
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

MomentSeq random_moments(std::size_t order, std::mt19937_64& rng) {
  std::vector<Rational> m{Rational(1)};
  for (std::size_t j = 1; j <= order; ++j) m.push_back(small_rational(rng));
  return MomentSeq(order, m);
}

}  // namespace

#define CHECK_ERRC(expr, expected)       \
  do {                                   \
    bool caught = false;                 \
    try {                                \
      (void)(expr);                      \
    } catch (const Error& e) {           \
      caught = true;                     \
      CHECK(e.code() == errc::expected); \
    }                                    \
    CHECK(caught);                       \
  } while (0)

TEST_CASE("moment sequence validation") {
  CHECK(MomentSeq().order == 0);
  CHECK_ERRC(MomentSeq(2, {Rational(1), Rational(0)}), invalid_parameter);
  CHECK_ERRC(MomentSeq(1, {Rational(2), Rational(0)}), invalid_parameter);
}

TEST_CASE("cumulant anchors") {
  std::vector<Rational> semicircle_kappa(7, Rational(0));
  semicircle_kappa[2] = 1;
  CHECK(cumulants_to_moments(semicircle_kappa) ==
        MomentSeq(6, {Rational(1), Rational(0), Rational(1), Rational(0), Rational(2), Rational(0),
                      Rational(5)}));

  // Free Poisson with rate one: all cumulants one, Catalan moments.
  std::vector<Rational> ones(7, Rational(1));
  ones[0] = 0;
  CHECK(cumulants_to_moments(ones) == catalan_seq(6));
  std::vector<Rational> back = moments_to_cumulants(catalan_seq(6));
  CHECK(back == ones);

  // Point mass at c: kappa_1 = c and nothing else.
  MomentSeq point(4, {Rational(1), Rational(3), Rational(9), Rational(27), Rational(81)});
  std::vector<Rational> pk = moments_to_cumulants(point);
  CHECK(pk == std::vector<Rational>{Rational(0), Rational(3), Rational(0), Rational(0),
                                    Rational(0)});
}

TEST_CASE("moment-cumulant recursion matches the reverted Cauchy transform") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    MomentSeq mu = random_moments(6, rng);
    CHECK(moments_to_cumulants(mu) == r_transform_cumulants(mu));
    CHECK(cumulants_to_moments(moments_to_cumulants(mu)) == mu);
  }
}

TEST_CASE("free addition is cumulant addition") {
  std::mt19937_64 rng(6021);
  for (int trial = 0; trial < 10; ++trial) {
    MomentSeq mu = random_moments(5, rng);
    MomentSeq nu = random_moments(5, rng);
    std::vector<Rational> ka = moments_to_cumulants(mu);
    std::vector<Rational> kb = moments_to_cumulants(nu);
    for (std::size_t i = 0; i < ka.size(); ++i) ka[i] += kb[i];
    CHECK(free_add(mu, nu) == cumulants_to_moments(ka));
  }
  MomentSeq sc = s_rational_even_moments({{Rational(1)}, {}}, 6);
  CHECK(free_add(sc, sc) == dilate_even_measure(sc, Rational(2)));
  CHECK_ERRC(free_add(MomentSeq(2), MomentSeq(3)), order_mismatch);
}

TEST_CASE("dilations and the symmetrized Poisson") {
  MomentSeq mp = s_rational_moments({{Rational(1)}, {}}, 4);
  MomentSeq scaled = dilate_measure(mp, Rational(-2));
  for (std::size_t j = 0; j <= 4; ++j) {
    CHECK(scaled.m[j] == pow_rational(Rational(-2), static_cast<long>(j)) * mp.m[j]);
  }
  CHECK_ERRC(dilate_measure(mp, Rational(0)), zero_scale);
  CHECK_ERRC(dilate_even_measure(mp, Rational(2)), non_symmetric_input);

  MomentSeq sym = sym_measure(mp);
  CHECK(sym.m[1] == 0);
  CHECK(sym.m[2] == 2);
  CHECK(sym.m[3] == 0);
  CHECK(sym.m[4] == 10);
}

TEST_CASE("squaring and square roots of measures") {
  MomentSeq sc = s_rational_even_moments({{Rational(1)}, {}}, 8);
  // The square of the semicircle law is free Poisson with rate one.
  CHECK(q_measure(sc) == s_rational_moments({{Rational(1)}, {}}, 4));
  CHECK(sqrt_measure(q_measure(sc)) == sc);

  MomentSeq mp = s_rational_moments({{Rational(1)}, {}}, 4);
  CHECK(q_measure(sqrt_measure(mp)) == mp);
  CHECK_ERRC(q_measure(mp), non_symmetric_input);
}

TEST_CASE("rational S-transform moments") {
  MomentSeq mp = s_rational_moments({{Rational(1)}, {}}, 10);
  CHECK(mp == catalan_seq(10));

  MomentSeq ratio = s_rational_moments({{Rational(1)}, {Rational(2)}}, 3);
  CHECK(ratio == MomentSeq(3, {Rational(1), Rational(1, 2), Rational(3, 8), Rational(5, 16)}));

  MomentSeq sc = s_rational_even_moments({{Rational(1)}, {}}, 10);
  CHECK(sc == MomentSeq(10, {Rational(1), Rational(0), Rational(1), Rational(0), Rational(2),
                             Rational(0), Rational(5), Rational(0), Rational(14), Rational(0),
                             Rational(42)}));

  MomentSeq arcsine =
      dilate_even_measure(s_rational_even_moments({{Rational(1)}, {Rational(2)}}, 6), Rational(4));
  CHECK(arcsine == MomentSeq(6, {Rational(1), Rational(0), Rational(2), Rational(0), Rational(6),
                                 Rational(0), Rational(20)}));

  CHECK(s_rational_moments({{}, {}}, 3) ==
        MomentSeq(3, {Rational(1), Rational(1), Rational(1), Rational(1)}));

  CHECK_ERRC(s_rational_moments({{Rational(0)}, {}}, 4), pole_at_origin);
  CHECK_ERRC(s_rational_moments({{Rational(1)}, {Rational(0)}}, 4), zero_linear_term);
  CHECK_ERRC(s_rational_moments({{Rational(1)}, {}}, 0), invalid_parameter);
}

TEST_CASE("empirical root measures square consistently") {
  MonicPoly p = from_roots({Rational(1), Rational(-1), Rational(2), Rational(-2)});
  MomentSeq emp(6, empirical_moments(p, 6));
  MomentSeq halves(3, empirical_moments(halve(p), 3));
  CHECK(q_measure(emp) == halves);
  CHECK(sqrt_measure(halves) == emp);
}

TEST_CASE("limit comparison across a polynomial sequence") {
  MomentSeq sc = s_rational_even_moments({{Rational(1)}, {}}, 4);
  std::vector<MonicPoly> seq{hermite(4), hermite(8), hermite(16)};
  LimitCompareReport rep = limit_compare(seq, sc, 4);
  CHECK(rep.rows.size() == 12);
  CHECK(rep.monotone);
  CHECK(rep.flags.empty());
  CHECK(rep.rows[0].degree == 4);
  CHECK(rep.rows[0].j == 1);
  CHECK(rep.rows[0].gap == 0);
  // Second moment gap at degree 2m is exactly 1/(2m).
  CHECK(rep.rows[1].gap == Rational(1, 4));
  CHECK(rep.rows[5].gap == Rational(1, 8));
  CHECK(rep.rows[9].gap == Rational(1, 16));

  std::string csv = limit_compare_to_csv(rep);
  CHECK(csv.rfind("degree,j,empirical,target,gap\n", 0) == 0);
  CHECK(csv.find("16,2,15/16,1,1/16\n") != std::string::npos);

  LimitCompareReport bad = limit_compare({hermite(16), hermite(4)}, sc, 4);
  CHECK(!bad.monotone);
  CHECK(!bad.flags.empty());

  CHECK_ERRC(limit_compare(seq, sc, 6), order_mismatch);
}

TEST_CASE("moment JSON round trip") {
  MomentSeq mu(3, {Rational(1), Rational(-1, 2), Rational(3, 4), Rational(0)});
  CHECK(moments_from_json(moments_to_json(mu)) == mu);
  CHECK_ERRC(moments_from_json("[]"), parse_error);
  CHECK_ERRC(moments_from_json("{\"order\":1}"), parse_error);
}