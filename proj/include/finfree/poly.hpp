#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "finfree/rational.hpp"

namespace finfree {

/// Monic polynomial of degree n >= 1 stored through the signed elementary
/// symmetric coefficients of its roots:
///
///   p(x) = sum_{k=0}^{n} x^{n-k} (-1)^k e_k,   e_0 = 1.
///
/// e_k is the k-th elementary symmetric function of the root multiset, so
/// from_roots / evaluate / power sums all agree without sign juggling.
struct MonicPoly {
  std::vector<Rational> e;  // size degree()+1, e[0] == 1

  MonicPoly() : e{Rational(1), Rational(0)} {}
  explicit MonicPoly(std::vector<Rational> coeffs_e);

  std::size_t degree() const { return e.size() - 1; }
};

bool operator==(const MonicPoly& p, const MonicPoly& q);

/// x^n - e1 x^{n-1} + ... from an explicit root multiset (EmptyRoots).
MonicPoly from_roots(const std::vector<Rational>& roots);

/// Monic power x^n.
MonicPoly x_power(std::size_t n);

Rational evaluate(const MonicPoly& p, const Rational& x);

/// True when every odd-indexed e_k vanishes, i.e. p(x) = q(x^2) * x^{0 or 1}.
bool is_even(const MonicPoly& p);

/// Root-scaling map: e_k -> alpha^k e_k, exactly the polynomial
/// alpha^n p(x/alpha) for rational alpha. The sqrt and imaginary kinds act on
/// even polynomials only, where alpha^{2k} stays rational.
struct DilationScale {
  enum class Kind { rational, sqrt_rational, imaginary_rational };
  Kind kind;
  Rational value;

  /// alpha = value, value != 0 (ZeroScale).
  static DilationScale rational(const Rational& value);
  /// alpha = sqrt(value) for value != 0 (ZeroScale); negative values act as
  /// i*sqrt(-value) and still map even polynomials to rational ones.
  static DilationScale sqrt_rational(const Rational& value);
  /// alpha = i*value, value != 0 (ZeroScale).
  static DilationScale imaginary_rational(const Rational& value);

  /// alpha^2 as a rational (defined for every kind).
  Rational alpha_squared() const;
};

/// Applies a dilation. Non-rational kinds require an even input (NonEvenInput).
MonicPoly dilate(const MonicPoly& p, const DilationScale& s);

/// Halves an even polynomial: p(x) = q(x^2) with e_k(q) = (-1)^k e_{2k}(p).
/// Degree must be even (OddDegree) and p must be even (NonEvenInput).
MonicPoly halve(const MonicPoly& p);

/// Inverse of halve: q of degree m maps to the even p of degree 2m with
/// p(x) = q(x^2), e_{2k}(p) = (-1)^k e_k(q).
MonicPoly double_poly(const MonicPoly& q);

/// Power sums p_j = sum_i root_i^j of the root multiset, j = 0..jmax, via the
/// Newton identities (p_0 = degree).
std::vector<Rational> power_sums(const MonicPoly& p, std::size_t jmax);

/// Moments of the empirical root distribution, m_j = p_j / degree.
std::vector<Rational> empirical_moments(const MonicPoly& p, std::size_t jmax);

/// Ascending monomial coefficients a_0..a_n with a_n = 1.
std::vector<Rational> to_monomial(const MonicPoly& p);

/// From ascending monomial coefficients; leading coefficient must be nonzero
/// and the result is normalized to monic. Degree must be >= 1.
MonicPoly from_monomial(const std::vector<Rational>& coeffs);

/// Plain polynomial product p(x) * q(x).
MonicPoly ordinary_mul(const MonicPoly& p, const MonicPoly& q);

/// JSON round trip: {"degree": n, "coeffs_e": ["1", ...]} with exact rational
/// strings.
std::string poly_to_json(const MonicPoly& p);
MonicPoly poly_from_json(const std::string& text);

}  // namespace finfree
