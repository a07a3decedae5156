#pragma once

#include <cstddef>
#include <vector>

#include "finfree/rational.hpp"

namespace finfree {

/// Default truncation order for series work (overridable per call and via the
/// CLI environment knob).
inline constexpr std::size_t kDefaultSeriesOrder = 12;

/// Formal power series truncated at z^order, held as order+1 exact
/// coefficients c[0..order].
struct TruncatedSeries {
  std::size_t order = 0;
  std::vector<Rational> c;  // size order+1

  TruncatedSeries() : c(1, Rational(0)) {}
  explicit TruncatedSeries(std::size_t ord) : order(ord), c(ord + 1, Rational(0)) {}
  TruncatedSeries(std::size_t ord, std::vector<Rational> coeffs);

  const Rational& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }
};

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

/// Copy truncated to a smaller (or equal) order.
TruncatedSeries truncate(const TruncatedSeries& f, std::size_t order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated to min(order a, order b).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s);

/// f(g(z)) truncated to min order; requires g(0) = 0.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse g with f(g(z)) = z + O(z^{order+1}).
/// Requires f(0) = 0 (ConstantTermNonzero) and f'(0) != 0 (ZeroLinearTerm).
TruncatedSeries series_revert(const TruncatedSeries& f);

/// Taylor expansion about 0 of prod_r (z + num[r]) / prod_s (z + den[s]).
/// Denominator entries must be nonzero (PoleAtOrigin).
TruncatedSeries series_rational(const std::vector<Rational>& num,
                                const std::vector<Rational>& den,
                                std::size_t order);

}  // namespace finfree
