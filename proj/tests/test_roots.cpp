#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "finfree/errors.hpp"
#include "finfree/poly.hpp"
#include "finfree/roots.hpp"

using namespace finfree;

namespace {

/// Census oracle for a polynomial built from known rational roots.
void check_census(const std::vector<Rational>& roots) {
  RootCertificate c = sturm_certificate(from_roots(roots));
  std::vector<Rational> distinct;
  std::size_t pos = 0, neg = 0, zero = 0;
  for (const auto& r : roots) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == r;
    if (!seen) distinct.push_back(r);
    if (r > 0) {
      ++pos;
    } else if (r < 0) {
      ++neg;
    } else {
      ++zero;
    }
  }
  CHECK(c.degree == roots.size());
  CHECK(c.distinct_real == distinct.size());
  CHECK(c.total_real_with_multiplicity == roots.size());
  CHECK(c.count_positive == pos);
  CHECK(c.count_negative == neg);
  CHECK(c.count_zero == zero);
  CHECK(c.squarefree_applied == (distinct.size() != roots.size()));
}

}  // namespace

TEST_CASE("exact census on rational root sets") {
  check_census({Rational(1), Rational(2), Rational(3)});
  check_census({Rational(0), Rational(0), Rational(2)});
  check_census({Rational(-1), Rational(-1), Rational(-1), Rational(5)});
  check_census({Rational(1, 2), Rational(1, 2)});
  check_census({Rational(-7, 3)});
  check_census({Rational(0)});
}

TEST_CASE("census sees complex pairs") {
  MonicPoly i2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});  // x^2 + 1
  RootCertificate c = sturm_certificate(i2);
  CHECK(c.distinct_real == 0);
  CHECK(c.total_real_with_multiplicity == 0);
  CHECK(!all_roots_real(c));

  MonicPoly mixed = ordinary_mul(i2, from_roots({Rational(1), Rational(-2)}));
  RootCertificate cm = sturm_certificate(mixed);
  CHECK(cm.degree == 4);
  CHECK(cm.total_real_with_multiplicity == 2);
  CHECK(cm.count_positive == 1);
  CHECK(cm.count_negative == 1);
  CHECK(cm.count_zero == 0);
}

TEST_CASE("nonnegativity predicate") {
  CHECK(all_roots_real_nonnegative(sturm_certificate(from_roots({Rational(0), Rational(1)}))));
  CHECK(!all_roots_real_nonnegative(sturm_certificate(from_roots({Rational(-1), Rational(1)}))));
  MonicPoly i2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  CHECK(!all_roots_real_nonnegative(sturm_certificate(i2)));
}

TEST_CASE("window counts with multiplicity") {
  MonicPoly p = from_roots({Rational(0), Rational(0), Rational(1)});  // x^3 - x^2
  CHECK(roots_in_window(p, Rational(-1), Rational(0)) == 2);
  CHECK(roots_in_window(p, Rational(0), Rational(1)) == 1);
  CHECK(roots_in_window(p, Rational(-2), Rational(1)) == 3);
  CHECK(roots_in_window(p, Rational(1), Rational(5)) == 0);

  MonicPoly dbl = from_roots({Rational(1, 2), Rational(1, 2), Rational(2)});
  CHECK(roots_in_window(dbl, Rational(0), Rational(1)) == 2);
}

TEST_CASE("numeric roots on separated spectra") {
  NumericRootSet rs = numeric_roots(from_roots({Rational(1), Rational(2), Rational(3)}));
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.roots[0].real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rs.roots[1].real() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(rs.roots[2].real() == doctest::Approx(3.0).epsilon(1e-10));
  for (const auto& z : rs.roots) CHECK(std::abs(z.imag()) < 1e-10);
  CHECK(rs.max_residual < 1e-9);
}

TEST_CASE("numeric roots on a complex pair and a double root") {
  NumericRootSet pair = numeric_roots(MonicPoly(
      std::vector<Rational>{Rational(1), Rational(0), Rational(1)}));
  REQUIRE(pair.roots.size() == 2);
  CHECK(pair.roots[0].imag() == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(pair.roots[1].imag() == doctest::Approx(1.0).epsilon(1e-10));

  NumericRootSet dbl = numeric_roots(from_roots({Rational(1), Rational(1)}));
  for (const auto& z : dbl.roots) {
    CHECK(std::abs(z - std::complex<double>(1.0, 0.0)) < 1e-5);
  }
}

TEST_CASE("numeric roots survive coefficient growth") {
  std::vector<Rational> big;
  for (long k = 1; k <= 10; ++k) big.push_back(Rational(k));
  NumericRootSet rs = numeric_roots(from_roots(big));
  REQUIRE(rs.roots.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(rs.roots[i].real() == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-6));
  }
}

TEST_CASE("csv rendering") {
  std::string csv = roots_to_csv(numeric_roots(from_roots({Rational(1), Rational(1)})));
  CHECK(csv.rfind("re,im,multiplicity_hint\n", 0) == 0);
  CHECK(csv.find(",2\n") != std::string::npos);  // the cluster hint
  std::string json = certificate_to_json(sturm_certificate(from_roots({Rational(1)})));
  CHECK(json.find("\"distinct_real\":1") != std::string::npos);
}
