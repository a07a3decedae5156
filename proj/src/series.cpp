#include "finfree/series.hpp"

#include <algorithm>

namespace finfree {

TruncatedSeries::TruncatedSeries(std::size_t ord, std::vector<Rational> coeffs)
    : order(ord), c(std::move(coeffs)) {
  require(c.size() == order + 1, errc::parse_error, "series needs order+1 coefficients");
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order == b.order && a.c == b.c;
}

TruncatedSeries truncate(const TruncatedSeries& f, std::size_t order) {
  require(order <= f.order, errc::order_mismatch, "cannot truncate to a larger order");
  TruncatedSeries out(order);
  std::copy(f.c.begin(), f.c.begin() + static_cast<long>(order) + 1, out.c.begin());
  return out;
}

namespace {

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order, b.order);
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order; ++i)
    for (std::size_t j = 0; i + j <= out.order && j <= b.order; ++j)
      if (i <= a.order) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s) {
  TruncatedSeries out = a;
  for (auto& x : out.c) x *= s;
  return out;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  require(g.c[0] == 0, errc::constant_term_nonzero, "inner series must vanish at 0");
  std::size_t ord = common_order(f, g);
  TruncatedSeries out(ord);
  out.c[0] = f.c[0];
  // Horner over f's coefficients: out = f_0 + g*(f_1 + g*(f_2 + ...)).
  TruncatedSeries acc(ord);
  for (std::size_t k = std::min(f.order, ord) + 1; k-- > 0;) {
    TruncatedSeries next = series_mul(acc, truncate(g, ord));
    next.c[0] += f.c[k];
    acc = next;
  }
  return acc;
}

TruncatedSeries series_revert(const TruncatedSeries& f) {
  require(f.c[0] == 0, errc::constant_term_nonzero, "series to revert must vanish at 0");
  require(f.order >= 1, errc::order_mismatch, "series to revert needs order >= 1");
  require(f.c[1] != 0, errc::zero_linear_term, "series to revert needs a nonzero linear term");
  TruncatedSeries g(f.order);
  g.c[1] = Rational(1) / f.c[1];
  // Solve [z^j] f(g) = 0 for j = 2..order; g_j enters that coefficient only
  // through the linear term of f.
  for (std::size_t j = 2; j <= f.order; ++j) {
    TruncatedSeries probe = truncate(g, j);
    probe.c[j] = 0;
    TruncatedSeries comp = series_compose(truncate(f, j), probe);
    g.c[j] = -comp.c[j] / f.c[1];
  }
  return g;
}

TruncatedSeries series_rational(const std::vector<Rational>& num,
                                const std::vector<Rational>& den,
                                std::size_t order) {
  TruncatedSeries out(order);
  out.c[0] = 1;
  for (const auto& a : num) {
    TruncatedSeries lin(order);
    lin.c[0] = a;
    if (order >= 1) lin.c[1] = 1;
    out = series_mul(out, lin);
  }
  for (const auto& b : den) {
    require(b != 0, errc::pole_at_origin, "denominator factor vanishes at the origin");
    // 1/(z+b) = (1/b) * sum_j (-z/b)^j.
    TruncatedSeries inv(order);
    Rational term = Rational(1) / b;
    for (std::size_t j = 0; j <= order; ++j) {
      inv.c[j] = term;
      term *= Rational(-1) / b;
    }
    out = series_mul(out, inv);
  }
  return out;
}

}  // namespace finfree
