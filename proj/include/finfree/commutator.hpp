#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

/// Expected characteristic polynomial of the scaled commutator word:
///   p box q = Sym(p) boxtimes Sym(q) boxtimes z_n   (equal degrees n).
MonicPoly box_square(const MonicPoly& p, const MonicPoly& q);

/// Even-degree commutators are even polynomials; this returns the half-degree
/// part computed through the multiplicative factorization
///   halve(Sym p) boxtimes halve(Sym q) boxtimes Dil_{1/4} H_m[2,2; 1-1/(2m), 2+1/m],
/// which must coincide with halve(box_square(p, q)). Degree must be even
/// (OddDegree).
MonicPoly commutator_even_part(const MonicPoly& p, const MonicPoly& q);

/// Result of testing the sufficient real-rootedness criterion on one input:
/// halve(Sym(q)) must factor as H_m[1-1/(2m); ] boxtimes r with r having only
/// nonnegative real roots. Failure is a value, not an error.
struct HypothesisCheck {
  bool holds = false;
  std::optional<MonicPoly> witness;  // r, present when holds
  std::string reason;                // populated when it fails
};

/// Runs the criterion on q (degree must be even, OddDegree).
HypothesisCheck check_hypothesis_58(const MonicPoly& q);

/// Full commutator report: the polynomial, its exact real-rootedness, and the
/// sufficient-criterion outcome (tried on q first, then on p, since the
/// criterion on either input settles real-rootedness for every partner).
struct CommutatorReport {
  MonicPoly result;
  bool real_rooted = false;
  HypothesisCheck hypothesis_58;
  std::string hypothesis_argument;  // "q", "p", or "" when neither holds
};

CommutatorReport commutator_report(const MonicPoly& p, const MonicPoly& q);

std::string commutator_report_to_json(const CommutatorReport& r);

/// Catalog of closed-form commutator identities at half-degree m. Rows:
///   hermite            ()            laguerre          (lambda, mu)
///   hermite_projection ()            bessel            (a, b), both < 0
///   projection         (r, s)        bernoulli         ()
///   jacobi             (a, b, c, d)
/// Empty params pick per-row defaults. Returns the computed commutator and
/// the closed-form right side; the two must agree exactly.
struct CatalogPair {
  MonicPoly lhs;
  MonicPoly rhs;
};

std::vector<std::string> table3_rows();
CatalogPair table3_catalog(const std::string& row, std::size_t m,
                           const std::vector<Rational>& params = {});

}  // namespace finfree
