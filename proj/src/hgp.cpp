#include "finfree/hgp.hpp"

#include <algorithm>

#include "json.hpp"

namespace finfree {

MonicPoly hgp(const HgpSpec& spec) {
  std::size_t n = spec.degree;
  require(n >= 1, errc::invalid_parameter, "degree must be at least 1");
  Rational rn(static_cast<long>(n));
  for (const auto& a : spec.lower) {
    Rational scaled = rn * a;
    require(!(is_integer(scaled) && scaled >= 0 && scaled < rn), errc::invalid_lower_parameter,
            "lower entry " + to_string(a) + " lies in the excluded set at degree " +
                std::to_string(n));
  }
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational num(1);
    for (const auto& b : spec.upper) num *= falling_factorial(rn * b, k);
    Rational den(1);
    for (const auto& a : spec.lower) den *= falling_factorial(rn * a, k);
    e[k] = binomial(n, k) * num / den;
  }
  return MonicPoly(std::move(e));
}

MonicPoly hgp_even(std::size_t m, const std::vector<Rational>& upper,
                   const std::vector<Rational>& lower) {
  return double_poly(hgp(HgpSpec{m, upper, lower}));
}

HgpSpec boxtimes_hgp_merge(const HgpSpec& s1, const HgpSpec& s2) {
  require(s1.degree == s2.degree, errc::degree_mismatch,
          "specs have degrees " + std::to_string(s1.degree) + " and " +
              std::to_string(s2.degree));
  HgpSpec out = s1;
  out.upper.insert(out.upper.end(), s2.upper.begin(), s2.upper.end());
  out.lower.insert(out.lower.end(), s2.lower.begin(), s2.lower.end());
  return out;
}

HgpSpec cancel_common_parameters(const HgpSpec& spec) {
  HgpSpec out;
  out.degree = spec.degree;
  out.upper = spec.upper;
  for (const auto& a : spec.lower) {
    auto it = std::find(out.upper.begin(), out.upper.end(), a);
    if (it != out.upper.end()) {
      out.upper.erase(it);
    } else {
      out.lower.push_back(a);
    }
  }
  return out;
}

MonicPoly laguerre(std::size_t n, const Rational& b) { return hgp(HgpSpec{n, {b}, {}}); }

MonicPoly laguerre_scaled(std::size_t n, const Rational& lambda) {
  require(lambda > 0, errc::invalid_parameter, "laguerre_scaled needs lambda > 0");
  return dilate(laguerre(n, lambda), DilationScale::rational(Rational(1, static_cast<long>(n))));
}

MonicPoly hermite(std::size_t n) {
  require(n >= 2 && n % 2 == 0, errc::invalid_parameter, "hermite needs an even degree");
  std::size_t m = n / 2;
  MonicPoly h = hgp_even(m, {Rational(1) - Rational(1, 2 * static_cast<long>(m))}, {});
  return dilate(h, DilationScale::sqrt_rational(Rational(1, static_cast<long>(m))));
}

MonicPoly bessel(std::size_t n, const Rational& a) {
  require(a < 0, errc::invalid_parameter, "bessel needs a < 0");
  MonicPoly h = hgp(HgpSpec{n, {}, {a}});
  return dilate(h, DilationScale::rational(Rational(-static_cast<long>(n))));
}

MonicPoly jacobi(std::size_t n, const Rational& a, const Rational& b) {
  return hgp(HgpSpec{n, {b}, {a}});
}

MonicPoly projection(std::size_t n, std::size_t r) {
  require(r <= n && n >= 1, errc::invalid_parameter, "projection needs 0 <= r <= n");
  std::vector<Rational> e(n + 1, Rational(0));
  for (std::size_t k = 0; k <= r; ++k) e[k] = binomial(r, k);
  return MonicPoly(std::move(e));
}

MonicPoly bernoulli(std::size_t n) {
  require(n >= 2 && n % 2 == 0, errc::invalid_parameter, "bernoulli needs an even degree");
  std::vector<Rational> roots;
  for (std::size_t i = 0; i < n / 2; ++i) {
    roots.emplace_back(1);
    roots.emplace_back(-1);
  }
  return from_roots(roots);
}

MonicPoly family(const std::string& name, std::size_t degree,
                 const std::vector<Rational>& params) {
  auto arity = [&](std::size_t want) {
    require(params.size() == want, errc::invalid_parameter,
            "family '" + name + "' takes " + std::to_string(want) + " parameter(s)");
  };
  if (name == "laguerre") {
    arity(1);
    return laguerre(degree, params[0]);
  }
  if (name == "laguerre_scaled") {
    arity(1);
    return laguerre_scaled(degree, params[0]);
  }
  if (name == "hermite") {
    arity(0);
    return hermite(degree);
  }
  if (name == "bessel") {
    arity(1);
    return bessel(degree, params[0]);
  }
  if (name == "jacobi") {
    arity(2);
    return jacobi(degree, params[0], params[1]);
  }
  if (name == "projection") {
    arity(1);
    require(is_integer(params[0]) && params[0] >= 0, errc::invalid_parameter,
            "projection rank must be a nonnegative integer");
    return projection(degree, static_cast<std::size_t>(params[0].get_num().get_si()));
  }
  if (name == "bernoulli") {
    arity(0);
    return bernoulli(degree);
  }
  fail(errc::invalid_parameter, "unknown family '" + name + "'");
}

RootWindow laguerre_window(std::size_t n, const Rational& b) {
  Rational rn(static_cast<long>(n));
  Rational nb = rn * b;
  if (is_integer(nb) && nb >= 1 && nb <= rn - 1) return RootWindow::nonnegative_with_zero_atom;
  if (b > Rational(1) - Rational(1, static_cast<long>(n))) return RootWindow::all_positive;
  if (b > (rn - 2) / rn && b < (rn - 1) / rn) return RootWindow::all_real;
  return RootWindow::unknown;
}

RootWindow bessel_window(std::size_t n, const Rational& a) {
  if (a > 0 && a < Rational(1, static_cast<long>(n))) return RootWindow::all_real;
  if (a < 0) return RootWindow::all_negative;
  return RootWindow::unknown;
}

RootWindow jacobi_window(std::size_t n, const Rational& a, const Rational& b) {
  Rational edge = Rational(1) - Rational(1, static_cast<long>(n));  // 1 - 1/n
  if (b > edge && a > b + edge) return RootWindow::unit_interval;
  if (b > edge && a < 0) return RootWindow::all_negative;
  if (a < 0 && b < a - edge) return RootWindow::all_positive;
  return RootWindow::unknown;
}

MonicPoly z_kernel(std::size_t n) {
  require(n >= 1, errc::invalid_parameter, "degree must be at least 1");
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  Rational rn(static_cast<long>(n));
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    Rational coeff = binomial(n, 2 * k) * falling_factorial(rn, k) * factorial(k) /
                     factorial(2 * k) * (rn + 1 - Rational(static_cast<long>(k))) / (rn + 1);
    int sign = (k % 2 == 0) ? 1 : -1;
    // the x^{n-2k} coefficient carries (-1)^k; in e-form that is e_{2k} itself
    e[2 * k] = Rational(sign) * coeff;
  }
  return MonicPoly(std::move(e));
}

MonicPoly z_kernel_closed_even(std::size_t m) {
  Rational half_m(1, 2 * static_cast<long>(m));
  Rational inv_m(1, static_cast<long>(m));
  MonicPoly h = hgp_even(m, {Rational(2), Rational(2), Rational(1) - half_m},
                         {-half_m, -half_m, Rational(2) + inv_m});
  return dilate(h, DilationScale::rational(Rational(1, 2)));
}

bool zeros_on_one_factorization_check(std::size_t n, std::size_t r, const Rational& b) {
  require(r <= n && n >= 1, errc::invalid_parameter, "need 0 <= r <= n");
  Rational rn(static_cast<long>(n));
  MonicPoly lhs = hgp(HgpSpec{n, {b}, {b + Rational(static_cast<long>(r)) / rn}});
  if (r == 0) {
    std::vector<Rational> ones(n, Rational(1));
    return lhs == from_roots(ones);
  }
  Rational ratio = rn / Rational(static_cast<long>(r));
  MonicPoly right = hgp(HgpSpec{r, {ratio * (b - 1) + 1}, {ratio * b + 1}});
  if (r == n) return lhs == right;
  std::vector<Rational> ones(n - r, Rational(1));
  return lhs == ordinary_mul(from_roots(ones), right);
}

std::string hgp_spec_to_json(const HgpSpec& spec) {
  nlohmann::ordered_json j;
  j["degree"] = spec.degree;
  j["upper"] = to_strings(spec.upper);
  j["lower"] = to_strings(spec.lower);
  return j.dump();
}

HgpSpec hgp_spec_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  require(!j.is_discarded(), errc::parse_error, "invalid JSON");
  require(j.contains("degree") && j.contains("upper") && j.contains("lower"), errc::parse_error,
          "hgp spec JSON needs degree, upper, lower");
  HgpSpec spec;
  spec.degree = j["degree"].get<std::size_t>();
  spec.upper = parse_rationals(j["upper"].get<std::vector<std::string>>());
  spec.lower = parse_rationals(j["lower"].get<std::vector<std::string>>());
  return spec;
}

}  // namespace finfree
