#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

/// Parameter block of a degree-n hypergeometric polynomial with coefficients
///
///   e_k = binom(n,k) * prod_t falling(n b_t, k) / prod_s falling(n a_s, k).
///
/// upper holds the b tuple, lower the a tuple. Lower entries must keep every
/// denominator nonzero for k <= n, i.e. a_s outside {0, 1/n, ..., (n-1)/n}.
struct HgpSpec {
  std::size_t degree = 1;
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

/// Materializes the spec (InvalidLowerParameter on excluded lower entries).
MonicPoly hgp(const HgpSpec& spec);

/// Even counterpart of degree 2m: the image of hgp({m, upper, lower}) under
/// the substitution x -> x^2 with alternating signs, e_{2k} = (-1)^k e_k.
MonicPoly hgp_even(std::size_t m, const std::vector<Rational>& upper,
                   const std::vector<Rational>& lower);

/// Equal-degree multiplicative merge: boxtimes on hypergeometric inputs just
/// concatenates parameter tuples (DegreeMismatch).
HgpSpec boxtimes_hgp_merge(const HgpSpec& s1, const HgpSpec& s2);

/// Removes parameter pairs occurring in both tuples (multiset cancellation).
HgpSpec cancel_common_parameters(const HgpSpec& spec);

/// Named classical families.
///   laguerre(n, b)         : plain hypergeometric with single upper entry b
///   laguerre_scaled(n, l)  : root scale 1/n applied to laguerre(n, l), l > 0
///   hermite(n)             : even degree n = 2m, scaled even family
///   bessel(n, a)           : root scale -n applied to the lower-a family, a < 0
///   jacobi(n, a, b)        : single upper b, single lower a
///   projection(n, r)       : (x-1)^r x^{n-r}, integer 0 <= r <= n
///   bernoulli(n)           : (x^2-1)^{n/2}, n even
MonicPoly laguerre(std::size_t n, const Rational& b);
MonicPoly laguerre_scaled(std::size_t n, const Rational& lambda);
MonicPoly hermite(std::size_t n);
MonicPoly bessel(std::size_t n, const Rational& a);
MonicPoly jacobi(std::size_t n, const Rational& a, const Rational& b);
MonicPoly projection(std::size_t n, std::size_t r);
MonicPoly bernoulli(std::size_t n);

/// String-keyed family dispatch used by the CLI; params are positional.
MonicPoly family(const std::string& name, std::size_t degree,
                 const std::vector<Rational>& params);

/// Known root-location windows, reported as queries rather than baked into
/// constructor preconditions. Each query describes the plain hypergeometric
/// polynomial carrying those parameters: laguerre_window speaks about
/// laguerre(n, b) and jacobi_window about jacobi(n, a, b) as constructed,
/// while bessel_window speaks about the lower-a family before the -n root
/// scale that bessel(n, a) applies on top (that scale flips every sign).
enum class RootWindow {
  nonnegative_with_zero_atom,
  all_real,
  all_positive,
  all_negative,
  unit_interval,
  unknown,
};

RootWindow laguerre_window(std::size_t n, const Rational& b);
RootWindow bessel_window(std::size_t n, const Rational& a);
RootWindow jacobi_window(std::size_t n, const Rational& a, const Rational& b);

/// Commutator kernel polynomial of degree n:
///   z_n = sum_{k=0}^{floor(n/2)} x^{n-2k} (-1)^k binom(n,2k) falling(n,k)
///         (k!/(2k)!) (n+1-k)/(n+1).
MonicPoly z_kernel(std::size_t n);

/// Closed even form of z_{2m} used as the independent cross-check of z_kernel.
MonicPoly z_kernel_closed_even(std::size_t m);

/// Exact check of the factorization
///   H_n[b; b + r/n] = (x-1)^{n-r} * H_r[(n/r)(b-1)+1; (n/r)b+1]
/// as an ordinary polynomial product (r = 0 and r = n degenerate gracefully).
bool zeros_on_one_factorization_check(std::size_t n, std::size_t r, const Rational& b);

std::string hgp_spec_to_json(const HgpSpec& spec);
HgpSpec hgp_spec_from_json(const std::string& text);

}  // namespace finfree
