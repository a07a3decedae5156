#include "finfree/rational.hpp"

#include <cctype>

namespace finfree {

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  size_t i = 0;
  auto digits = [&](size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (!digits(i)) return false;
  return i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  require(looks_like_rational(text), errc::parse_error, "not a rational literal: '" + text + "'");
  mpq_class r;
  if (r.set_str(text, 10) != 0) fail(errc::parse_error, "not a rational literal: '" + text + "'");
  require(r.get_den() != 0, errc::parse_error, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_str();
}

double to_double(const Rational& r) {
  return r.get_d();
}

Rational pow_rational(const Rational& r, long k) {
  if (k == 0) return Rational(1);
  require(r != 0 || k > 0, errc::invalid_parameter, "0 raised to a negative power");
  Rational base = k > 0 ? r : Rational(1) / r;
  unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
  Rational acc(1);
  while (e > 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return acc;
}

bool is_integer(const Rational& r) {
  // robust against non-canonical representations like mpq_class(4, 2)
  return mpz_divisible_p(r.get_num().get_mpz_t(), r.get_den().get_mpz_t()) != 0;
}

Rational falling_factorial(const Rational& a, unsigned long k) {
  Rational acc(1);
  for (unsigned long i = 0; i < k; ++i) acc *= a - Rational(static_cast<long>(i));
  return acc;
}

Rational rising_factorial(const Rational& a, unsigned long k) {
  Rational acc(1);
  for (unsigned long i = 0; i < k; ++i) acc *= a + Rational(static_cast<long>(i));
  return acc;
}

Rational factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

Rational binomial(unsigned long n, unsigned long k) {
  require(k <= n, errc::invalid_parameter, "binomial needs k <= n");
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace finfree
