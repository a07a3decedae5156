#include <vector>

#include "doctest.h"

#include "finfree/errors.hpp"
#include "finfree/poly.hpp"

using namespace finfree;

namespace {
MonicPoly make(std::initializer_list<long> nums) {
  std::vector<Rational> e;
  for (long v : nums) e.push_back(Rational(v));
  return MonicPoly(e);
}
}  // namespace

TEST_CASE("construction and evaluation") {
  MonicPoly x;
  CHECK(x.degree() == 1);
  CHECK(evaluate(x, Rational(5)) == 5);

  CHECK_THROWS_AS(MonicPoly(std::vector<Rational>{Rational(2), Rational(0)}), Error);
  CHECK_THROWS_AS(MonicPoly(std::vector<Rational>{Rational(1)}), Error);

  MonicPoly p = from_roots({Rational(1), Rational(2)});
  CHECK(p.e == std::vector<Rational>{Rational(1), Rational(3), Rational(2)});
  CHECK(evaluate(p, Rational(1)) == 0);
  CHECK(evaluate(p, Rational(0)) == 2);
  CHECK(evaluate(p, Rational(4)) == 6);

  MonicPoly q = from_roots({Rational(1, 2), Rational(-3, 2)});
  CHECK(evaluate(q, Rational(1, 2)) == 0);
  CHECK(evaluate(q, Rational(-3, 2)) == 0);

  CHECK_THROWS_AS(from_roots({}), Error);
  CHECK(x_power(3).e == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(evaluate(x_power(3), Rational(2)) == 8);
}

TEST_CASE("power sums match the roots") {
  MonicPoly p = from_roots({Rational(1), Rational(2), Rational(3)});
  std::vector<Rational> ps = power_sums(p, 4);
  CHECK(ps[0] == 3);
  CHECK(ps[1] == 6);
  CHECK(ps[2] == 14);
  CHECK(ps[3] == 36);
  CHECK(ps[4] == 98);

  std::vector<Rational> mom = empirical_moments(p, 2);
  CHECK(mom[0] == 1);
  CHECK(mom[1] == 2);
  CHECK(mom[2] == Rational(14, 3));

  // Beyond-degree power sums still follow Newton's identity.
  MonicPoly lin = from_roots({Rational(2, 3)});
  CHECK(power_sums(lin, 3)[3] == Rational(8, 27));
}

TEST_CASE("dilation by a rational scale moves the roots") {
  MonicPoly p = from_roots({Rational(1), Rational(2)});
  CHECK(dilate(p, DilationScale::rational(Rational(3))).e ==
        from_roots({Rational(3), Rational(6)}).e);
  CHECK(dilate(p, DilationScale::rational(Rational(-1))).e ==
        from_roots({Rational(-1), Rational(-2)}).e);
  CHECK_THROWS_AS(DilationScale::rational(Rational(0)), Error);
}

TEST_CASE("square root and imaginary dilations act on even polynomials") {
  MonicPoly even = from_roots({Rational(1), Rational(-1)});
  CHECK(is_even(even));
  CHECK(dilate(even, DilationScale::sqrt_rational(Rational(4))).e ==
        from_roots({Rational(2), Rational(-2)}).e);
  // sqrt(-1) sends x^2 - 1 to x^2 + 1.
  CHECK(dilate(even, DilationScale::sqrt_rational(Rational(-1))).e ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  CHECK(dilate(even, DilationScale::imaginary_rational(Rational(1))).e ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(1)});

  MonicPoly odd = from_roots({Rational(1), Rational(2)});
  CHECK(!is_even(odd));
  CHECK_THROWS_AS(dilate(odd, DilationScale::sqrt_rational(Rational(4))), Error);
}

TEST_CASE("halve and double are inverse on even polynomials") {
  // x^4 - 5 x^2 + 4 = (x^2 - 1)(x^2 - 4)
  MonicPoly quartic = from_roots({Rational(1), Rational(-1), Rational(2), Rational(-2)});
  MonicPoly half = halve(quartic);
  CHECK(half.e == from_roots({Rational(1), Rational(4)}).e);
  CHECK(double_poly(half).e == quartic.e);

  MonicPoly with_zero = from_roots({Rational(0), Rational(0), Rational(3), Rational(-3)});
  CHECK(halve(with_zero).e == from_roots({Rational(0), Rational(9)}).e);

  CHECK_THROWS_AS(halve(from_roots({Rational(1)})), Error);               // odd degree
  CHECK_THROWS_AS(halve(from_roots({Rational(1), Rational(2)})), Error);  // not even
}

TEST_CASE("monomial conversions and products") {
  MonicPoly p = make({1, 0, 2});  // x^2 + 2
  std::vector<Rational> mono = to_monomial(p);
  CHECK(mono == std::vector<Rational>{Rational(2), Rational(0), Rational(1)});
  CHECK(from_monomial(mono).e == p.e);
  // Non-monic input is normalized by the leading coefficient.
  CHECK(from_monomial({Rational(4), Rational(0), Rational(2)}).e == p.e);

  CHECK(ordinary_mul(from_roots({Rational(1)}), from_roots({Rational(-1)})).e ==
        from_roots({Rational(1), Rational(-1)}).e);
  MonicPoly cubic = ordinary_mul(p, from_roots({Rational(5)}));
  CHECK(evaluate(cubic, Rational(5)) == 0);
  CHECK(evaluate(cubic, Rational(1)) == -12);
}

TEST_CASE("polynomial JSON round trip") {
  MonicPoly p = from_roots({Rational(1, 2), Rational(-2)});
  CHECK(poly_from_json(poly_to_json(p)).e == p.e);
  CHECK_THROWS_AS(poly_from_json("{"), Error);
  CHECK_THROWS_AS(poly_from_json("{\"degree\":2}"), Error);
  // coeffs must open with e_0 = 1
  CHECK_THROWS_AS(poly_from_json("{\"degree\":1,\"coeffs_e\":[\"2\",\"0\"]}"), Error);
}
