#pragma once

#include <stdexcept>
#include <string>

namespace finfree {

/// Error categories raised by the library. Every throwing precondition in the
/// public API maps to exactly one of these tags so callers can dispatch on it.
enum class errc {
  parse_error,
  empty_roots,
  non_even_input,
  zero_scale,
  odd_degree,
  degree_mismatch,
  forbidden_alpha,
  zero_coefficient_divisor,
  degenerate_parameter,
  invalid_lower_parameter,
  invalid_parameter,
  zero_linear_term,
  constant_term_nonzero,
  pole_at_origin,
  order_mismatch,
  non_symmetric_input,
  length_mismatch,
  degree_cap,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::empty_roots: return "EmptyRoots";
    case errc::non_even_input: return "NonEvenInput";
    case errc::zero_scale: return "ZeroScale";
    case errc::odd_degree: return "OddDegree";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::forbidden_alpha: return "ForbiddenAlpha";
    case errc::zero_coefficient_divisor: return "ZeroCoefficientDivisor";
    case errc::degenerate_parameter: return "DegenerateParameter";
    case errc::invalid_lower_parameter: return "InvalidLowerParameter";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::zero_linear_term: return "ZeroLinearTerm";
    case errc::constant_term_nonzero: return "ConstantTermNonzero";
    case errc::pole_at_origin: return "PoleAtOrigin";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::non_symmetric_input: return "NonSymmetricInput";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::degree_cap: return "DegreeCap";
  }
  return "UnknownError";
}

/// Library exception carrying a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool ok, errc code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

}  // namespace finfree
