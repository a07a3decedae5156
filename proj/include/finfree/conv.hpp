#pragma once

#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

/// Additive finite free convolution of two monic polynomials of the same
/// degree n (DegreeMismatch):
///
///   e_k(p + q) = falling(n,k) * sum_{i+j=k} e_i(p) e_j(q)
///                / (falling(n,i) falling(n,j)).
MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q);

/// Multiplicative finite free convolution at equal degree n:
///   e_k(p x q) = e_k(p) e_k(q) / binom(n,k).
MonicPoly boxtimes(const MonicPoly& p, const MonicPoly& q);

/// Solves boxtimes(h, r) = p for r: e_k(r) = binom(n,k) e_k(p) / e_k(h).
/// Throws ZeroCoefficientDivisor naming the first offending k where
/// e_k(h) = 0 while e_k(p) != 0.
MonicPoly boxtimes_divide(const MonicPoly& p, const MonicPoly& h);

/// Rectangular additive convolution with aspect parameter alpha on degree-m
/// inputs (DegreeMismatch); alpha must avoid {-1, ..., -m} (ForbiddenAlpha):
///
///   e_k(out) / (falling(m,k) falling(m+alpha,k))
///     = sum_{i+j=k} e_i(p)/(falling(m,i) falling(m+alpha,i))
///                 * e_j(q)/(falling(m,j) falling(m+alpha,j)).
MonicPoly rect_boxplus(const MonicPoly& p, const MonicPoly& q, const Rational& alpha);

/// Sym(p) = p boxplus Dil_{-1} p; always an even polynomial.
MonicPoly symmetrize(const MonicPoly& p);

/// Polynomial built from a terminating hypergeometric differential series:
///
///   fds(c, l, m, a, b)
///     = sum_{k=0}^{m} [rising(-m b, k)/rising(-m a, k)] (c^k / k!)
///       falling(l m, l k) x^{l m - l k}
///
/// where rising(-m t, k) abbreviates the product over the tuple t. Degree is
/// l*m. Lower tuple entries must keep every denominator factor nonzero for
/// k <= m (DegenerateParameter).
MonicPoly from_differential_series(const Rational& c, std::size_t l, std::size_t m,
                                   const std::vector<Rational>& lower,
                                   const std::vector<Rational>& upper);

/// Checks halve(p boxtimes q) == halve(p) boxtimes halve(q) boxtimes kappa_m
/// for the degree-m correction kernel kappa_m; p, q even of equal even degree
/// (OddDegree, NonEvenInput, DegreeMismatch). Returns true iff exact equality
/// holds.
bool halve_boxtimes_identity_check(const MonicPoly& p, const MonicPoly& q);

/// Checks halve(p boxplus q) == rect_boxplus(halve(p), halve(q), -1/2) for
/// even p, q of equal even degree. Returns true iff exact equality holds.
bool halve_boxplus_identity_check(const MonicPoly& p, const MonicPoly& q);

}  // namespace finfree
