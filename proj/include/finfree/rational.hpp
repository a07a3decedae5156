#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "finfree/errors.hpp"

namespace finfree {

/// Exact rational scalar. GMP keeps values canonical: lowest terms, positive
/// denominator, zero stored as 0/1. All library arithmetic is exact; no
/// floating point enters the numeric kernel.
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" (q > 0 not required on input; result is
/// canonical). Throws ParseError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form, denominator printed only when it is not 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// r^k for integer k; k < 0 requires r != 0.
Rational pow_rational(const Rational& r, long k);

bool is_integer(const Rational& r);

/// Falling factorial a(a-1)...(a-k+1); k = 0 gives 1.
Rational falling_factorial(const Rational& a, unsigned long k);

/// Rising factorial a(a+1)...(a+k-1); k = 0 gives 1.
Rational rising_factorial(const Rational& a, unsigned long k);

/// n! as an exact integer-valued rational.
Rational factorial(unsigned long n);

/// Binomial coefficient for integer arguments, 0 <= k <= n.
Rational binomial(unsigned long n, unsigned long k);

std::vector<std::string> to_strings(const std::vector<Rational>& v);
std::vector<Rational> parse_rationals(const std::vector<std::string>& v);

}  // namespace finfree
