#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

/// Exact census of the real roots of a rational polynomial. The sign counts
/// are taken with multiplicity and partition total_real_with_multiplicity.
struct RootCertificate {
  std::size_t degree = 0;
  std::size_t distinct_real = 0;
  std::size_t total_real_with_multiplicity = 0;
  std::size_t count_positive = 0;
  std::size_t count_negative = 0;
  std::size_t count_zero = 0;
  bool squarefree_applied = false;
};

/// Sturm-chain census over exact rationals. Never touches floating point.
RootCertificate sturm_certificate(const MonicPoly& p);

bool all_roots_real(const RootCertificate& c);
bool all_roots_real_nonnegative(const RootCertificate& c);

/// Number of real roots in the half-open window (lo, hi], counted with
/// multiplicity. Requires lo < hi.
std::size_t roots_in_window(const MonicPoly& p, const Rational& lo, const Rational& hi);

/// Numeric root set from a balanced companion matrix plus Newton polishing.
struct NumericRootSet {
  std::vector<std::complex<double>> roots;
  double max_residual = 0.0;
};

/// All complex roots in double precision. Degree is capped at 256 (DegreeCap).
NumericRootSet numeric_roots(const MonicPoly& p);

std::string certificate_to_json(const RootCertificate& c);

/// CSV dump "re,im,multiplicity_hint"; the hint is the size of the cluster of
/// numerically coincident roots a root belongs to.
std::string roots_to_csv(const NumericRootSet& r);

}  // namespace finfree
