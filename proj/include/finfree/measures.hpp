#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "finfree/poly.hpp"
#include "finfree/series.hpp"

namespace finfree {

/// Moment sequence of a compactly supported probability measure, exact up to
/// a truncation order: m[j] for j = 0..order with m[0] = 1.
struct MomentSeq {
  std::size_t order = 0;
  std::vector<Rational> m;

  MomentSeq() : m{Rational(1)} {}
  explicit MomentSeq(std::size_t ord) : order(ord), m(ord + 1, Rational(0)) { m[0] = 1; }
  MomentSeq(std::size_t ord, std::vector<Rational> moments);
};

bool operator==(const MomentSeq& a, const MomentSeq& b);

/// Free cumulants kappa_1..kappa_order (index 0 unused, kept 0) through the
/// moment-cumulant recursion over non-crossing partitions.
std::vector<Rational> moments_to_cumulants(const MomentSeq& mu);
MomentSeq cumulants_to_moments(const std::vector<Rational>& kappa);

/// Free additive convolution at equal truncation order (OrderMismatch).
MomentSeq free_add(const MomentSeq& mu, const MomentSeq& nu);

/// Pushforward under x -> alpha x: m_j -> alpha^j m_j (alpha != 0, ZeroScale).
MomentSeq dilate_measure(const MomentSeq& mu, const Rational& alpha);

/// Even-measure pushforward under x -> sqrt(c) x: m_{2j} -> c^j m_{2j}.
/// Requires vanishing odd moments (NonSymmetricInput); c != 0 (ZeroScale).
MomentSeq dilate_even_measure(const MomentSeq& mu, const Rational& c);

/// Sym(mu) = mu boxplus Dil_{-1} mu.
MomentSeq sym_measure(const MomentSeq& mu);

/// Pushforward of an even measure under x -> x^2: m_j(out) = m_{2j}(mu).
/// Odd moments must vanish (NonSymmetricInput); output order is floor(order/2).
MomentSeq q_measure(const MomentSeq& mu);

/// Symmetric square root: even measure with m_{2j} = m_j(nu), output order
/// doubles.
MomentSeq sqrt_measure(const MomentSeq& nu);

/// Spec of a measure through a rational S-transform
///   S(z) = prod_r (z + lower_r) / prod_s (z + upper_s).
struct SRationalSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

/// Moments out to the requested order by reverting
///   M^{<-1>}(z) = z S(z) / (z + 1).
/// Upper entries must be nonzero (PoleAtOrigin).
MomentSeq s_rational_moments(const SRationalSpec& spec, std::size_t order);

/// Even-measure variant: sqrt_measure of the S-rational moments, truncated to
/// the requested order.
MomentSeq s_rational_even_moments(const SRationalSpec& spec, std::size_t order);

/// Convergence report of empirical root-moment sequences against a target.
struct LimitCompareRow {
  std::size_t degree = 0;
  std::size_t j = 0;
  Rational empirical;
  Rational target;
  Rational gap;
};

struct LimitCompareReport {
  std::vector<LimitCompareRow> rows;
  std::vector<std::string> flags;  // one entry per non-monotone gap step
  bool monotone = true;
};

LimitCompareReport limit_compare(const std::vector<MonicPoly>& seq, const MomentSeq& target,
                                 std::size_t jmax);

std::string limit_compare_to_csv(const LimitCompareReport& rep);

std::string moments_to_json(const MomentSeq& mu);
MomentSeq moments_from_json(const std::string& text);

}  // namespace finfree
