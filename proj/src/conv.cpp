#include "finfree/conv.hpp"

#include "finfree/hgp.hpp"

namespace finfree {

namespace {

std::vector<Rational> falling_table(const Rational& a, std::size_t kmax) {
  std::vector<Rational> f(kmax + 1);
  f[0] = 1;
  for (std::size_t k = 1; k <= kmax; ++k) f[k] = f[k - 1] * (a - Rational(static_cast<long>(k - 1)));
  return f;
}

void require_same_degree(const MonicPoly& p, const MonicPoly& q) {
  require(p.degree() == q.degree(), errc::degree_mismatch,
          "operands have degrees " + std::to_string(p.degree()) + " and " +
              std::to_string(q.degree()));
}

}  // namespace

MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q) {
  require_same_degree(p, q);
  std::size_t n = p.degree();
  std::vector<Rational> f = falling_table(Rational(static_cast<long>(n)), n);
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i <= k; ++i) acc += p.e[i] * q.e[k - i] / (f[i] * f[k - i]);
    e[k] = f[k] * acc;
  }
  return MonicPoly(std::move(e));
}

MonicPoly boxtimes(const MonicPoly& p, const MonicPoly& q) {
  require_same_degree(p, q);
  std::size_t n = p.degree();
  std::vector<Rational> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) e[k] = p.e[k] * q.e[k] / binomial(n, k);
  return MonicPoly(std::move(e));
}

MonicPoly boxtimes_divide(const MonicPoly& p, const MonicPoly& h) {
  require_same_degree(p, h);
  std::size_t n = p.degree();
  std::vector<Rational> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (h.e[k] == 0) {
      require(p.e[k] == 0, errc::zero_coefficient_divisor,
              "divisor coefficient e_" + std::to_string(k) + " vanishes");
      e[k] = 0;
      continue;
    }
    e[k] = binomial(n, k) * p.e[k] / h.e[k];
  }
  return MonicPoly(std::move(e));
}

MonicPoly rect_boxplus(const MonicPoly& p, const MonicPoly& q, const Rational& alpha) {
  require_same_degree(p, q);
  std::size_t m = p.degree();
  if (is_integer(alpha)) {
    Rational neg = -alpha;
    require(!(neg >= 1 && neg <= Rational(static_cast<long>(m))), errc::forbidden_alpha,
            "alpha = " + to_string(alpha) + " is excluded for degree " + std::to_string(m));
  }
  std::vector<Rational> f = falling_table(Rational(static_cast<long>(m)), m);
  std::vector<Rational> g = falling_table(Rational(static_cast<long>(m)) + alpha, m);
  std::vector<Rational> e(m + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i <= k; ++i)
      acc += p.e[i] * q.e[k - i] / (f[i] * g[i] * f[k - i] * g[k - i]);
    e[k] = f[k] * g[k] * acc;
  }
  return MonicPoly(std::move(e));
}

MonicPoly symmetrize(const MonicPoly& p) {
  return boxplus(p, dilate(p, DilationScale::rational(Rational(-1))));
}

MonicPoly from_differential_series(const Rational& c, std::size_t l, std::size_t m,
                                   const std::vector<Rational>& lower,
                                   const std::vector<Rational>& upper) {
  require(l >= 1 && m >= 1, errc::invalid_parameter, "need l >= 1 and m >= 1");
  Rational rm(static_cast<long>(m));
  for (const auto& a : lower) {
    Rational scaled = rm * a;
    require(!(is_integer(scaled) && scaled >= 0 && scaled < rm), errc::degenerate_parameter,
            "lower entry " + to_string(a) + " degenerates at degree parameter " +
                std::to_string(m));
  }
  std::size_t n = l * m;
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  Rational ln(static_cast<long>(n));
  Rational term_c(1);
  for (std::size_t k = 1; k <= m; ++k) {
    term_c *= c;
    Rational num(1);
    for (const auto& b : upper) num *= rising_factorial(-rm * b, k);
    Rational den(1);
    for (const auto& a : lower) den *= rising_factorial(-rm * a, k);
    Rational coeff = num / den * term_c / factorial(k) *
                     falling_factorial(ln, static_cast<unsigned long>(l * k));
    // coefficient of x^{n-lk} equals (-1)^{lk} e_{lk}
    int sign = (l * k) % 2 == 0 ? 1 : -1;
    e[l * k] = Rational(sign) * coeff;
  }
  return MonicPoly(std::move(e));
}

bool halve_boxtimes_identity_check(const MonicPoly& p, const MonicPoly& q) {
  require(p.degree() % 2 == 0, errc::odd_degree, "inputs must have even degree");
  require_same_degree(p, q);
  require(is_even(p) && is_even(q), errc::non_even_input, "inputs must be even");
  std::size_t m = p.degree() / 2;
  MonicPoly lhs = halve(boxtimes(p, q));
  Rational half_m(1, 2 * static_cast<long>(m));
  HgpSpec kernel{m, {-half_m}, {Rational(1) - half_m}};
  MonicPoly rhs = boxtimes(boxtimes(halve(p), halve(q)), hgp(kernel));
  return lhs == rhs;
}

bool halve_boxplus_identity_check(const MonicPoly& p, const MonicPoly& q) {
  require(p.degree() % 2 == 0, errc::odd_degree, "inputs must have even degree");
  require_same_degree(p, q);
  require(is_even(p) && is_even(q), errc::non_even_input, "inputs must be even");
  MonicPoly lhs = halve(boxplus(p, q));
  MonicPoly rhs = rect_boxplus(halve(p), halve(q), Rational(-1, 2));
  return lhs == rhs;
}

}  // namespace finfree
