#include "finfree/poly.hpp"

#include "json.hpp"

namespace finfree {

using nlohmann::json;

MonicPoly::MonicPoly(std::vector<Rational> coeffs_e) : e(std::move(coeffs_e)) {
  require(e.size() >= 2, errc::invalid_parameter, "polynomial degree must be at least 1");
  require(e[0] == 1, errc::invalid_parameter, "leading normalization e_0 must be 1");
}

bool operator==(const MonicPoly& p, const MonicPoly& q) { return p.e == q.e; }

MonicPoly from_roots(const std::vector<Rational>& roots) {
  require(!roots.empty(), errc::empty_roots, "root list is empty");
  std::vector<Rational> e(roots.size() + 1, Rational(0));
  e[0] = 1;
  std::size_t used = 0;
  for (const auto& r : roots) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += r * e[k - 1];
  }
  return MonicPoly(std::move(e));
}

MonicPoly x_power(std::size_t n) {
  require(n >= 1, errc::invalid_parameter, "degree must be at least 1");
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  return MonicPoly(std::move(e));
}

Rational evaluate(const MonicPoly& p, const Rational& x) {
  Rational acc(1);
  int sign = 1;
  for (std::size_t k = 1; k < p.e.size(); ++k) {
    sign = -sign;
    acc = acc * x + Rational(sign) * p.e[k];
  }
  return acc;
}

bool is_even(const MonicPoly& p) {
  for (std::size_t k = 1; k < p.e.size(); k += 2)
    if (p.e[k] != 0) return false;
  return true;
}

DilationScale DilationScale::rational(const Rational& value) {
  require(value != 0, errc::zero_scale, "dilation by zero");
  return DilationScale{Kind::rational, value};
}

DilationScale DilationScale::sqrt_rational(const Rational& value) {
  require(value != 0, errc::zero_scale, "dilation by zero");
  return DilationScale{Kind::sqrt_rational, value};
}

DilationScale DilationScale::imaginary_rational(const Rational& value) {
  require(value != 0, errc::zero_scale, "dilation by zero");
  return DilationScale{Kind::imaginary_rational, value};
}

Rational DilationScale::alpha_squared() const {
  switch (kind) {
    case Kind::rational: return value * value;
    case Kind::sqrt_rational: return value;
    case Kind::imaginary_rational: return -value * value;
  }
  return Rational(0);
}

MonicPoly dilate(const MonicPoly& p, const DilationScale& s) {
  MonicPoly out = p;
  if (s.kind == DilationScale::Kind::rational) {
    Rational pw(1);
    for (std::size_t k = 1; k < out.e.size(); ++k) {
      pw *= s.value;
      out.e[k] *= pw;
    }
    return out;
  }
  require(is_even(p), errc::non_even_input, "non-rational dilation needs an even polynomial");
  Rational a2 = s.alpha_squared();
  Rational pw(1);
  for (std::size_t k = 2; k < out.e.size(); k += 2) {
    pw *= a2;
    out.e[k] *= pw;
  }
  return out;
}

MonicPoly halve(const MonicPoly& p) {
  require(p.degree() % 2 == 0, errc::odd_degree, "halve needs an even degree");
  require(is_even(p), errc::non_even_input, "halve needs an even polynomial");
  std::size_t m = p.degree() / 2;
  std::vector<Rational> e(m + 1);
  int sign = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    e[k] = Rational(sign) * p.e[2 * k];
    sign = -sign;
  }
  return MonicPoly(std::move(e));
}

MonicPoly double_poly(const MonicPoly& q) {
  std::size_t m = q.degree();
  std::vector<Rational> e(2 * m + 1, Rational(0));
  int sign = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    e[2 * k] = Rational(sign) * q.e[k];
    sign = -sign;
  }
  return MonicPoly(std::move(e));
}

std::vector<Rational> power_sums(const MonicPoly& p, std::size_t jmax) {
  std::size_t n = p.degree();
  std::vector<Rational> ps(jmax + 1, Rational(0));
  ps[0] = Rational(static_cast<long>(n));
  for (std::size_t k = 1; k <= jmax; ++k) {
    Rational acc(0);
    int sign = 1;  // (-1)^{i-1} for i = 1, 2, ...
    std::size_t top = std::min(k - 1, n);
    for (std::size_t i = 1; i <= top; ++i) {
      acc += Rational(sign) * p.e[i] * ps[k - i];
      sign = -sign;
    }
    if (k <= n) {
      int ksign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
      acc += Rational(ksign) * Rational(static_cast<long>(k)) * p.e[k];
    }
    ps[k] = acc;
  }
  return ps;
}

std::vector<Rational> empirical_moments(const MonicPoly& p, std::size_t jmax) {
  std::vector<Rational> m = power_sums(p, jmax);
  Rational n(static_cast<long>(p.degree()));
  for (auto& x : m) x /= n;
  return m;
}

std::vector<Rational> to_monomial(const MonicPoly& p) {
  std::size_t n = p.degree();
  std::vector<Rational> a(n + 1);
  int sign = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    a[n - k] = Rational(sign) * p.e[k];
    sign = -sign;
  }
  return a;
}

MonicPoly from_monomial(const std::vector<Rational>& coeffs) {
  require(coeffs.size() >= 2, errc::invalid_parameter, "degree must be at least 1");
  std::size_t n = coeffs.size() - 1;
  const Rational& lead = coeffs[n];
  require(lead != 0, errc::invalid_parameter, "leading coefficient is zero");
  std::vector<Rational> e(n + 1);
  int sign = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    e[k] = Rational(sign) * coeffs[n - k] / lead;
    sign = -sign;
  }
  return MonicPoly(std::move(e));
}

MonicPoly ordinary_mul(const MonicPoly& p, const MonicPoly& q) {
  std::vector<Rational> a = to_monomial(p);
  std::vector<Rational> b = to_monomial(q);
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return from_monomial(c);
}

std::string poly_to_json(const MonicPoly& p) {
  nlohmann::ordered_json j;
  j["degree"] = p.degree();
  j["coeffs_e"] = to_strings(p.e);
  return j.dump();
}

MonicPoly poly_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), errc::parse_error, "invalid JSON");
  require(j.contains("degree") && j.contains("coeffs_e"), errc::parse_error,
          "polynomial JSON needs degree and coeffs_e");
  std::vector<std::string> raw = j["coeffs_e"].get<std::vector<std::string>>();
  MonicPoly p(parse_rationals(raw));
  require(p.degree() == j["degree"].get<std::size_t>(), errc::parse_error,
          "degree field disagrees with coeffs_e length");
  return p;
}

}  // namespace finfree
