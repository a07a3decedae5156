#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

/// Haar-distributed unitary via QR of a complex Ginibre sample with the
/// R-diagonal phase correction.
Eigen::MatrixXcd sample_haar_unitary(std::size_t n, std::mt19937_64& rng);

enum class Word { sum, product, commutator };

Word word_from_string(const std::string& name);
std::string word_to_string(Word w);

/// Monte Carlo estimate of the expected characteristic polynomial
/// coefficients E[e_k] of the chosen word in A and U B U*, with A = diag(a),
/// B = diag(b):
///   sum        A + U B U*
///   product    A U B U*
///   commutator i (A U B U* - U B U* A)
/// Trials use counter-derived per-trial RNG streams, so a fixed seed gives a
/// fixed result regardless of scheduling. Requires equal diagonal lengths
/// (LengthMismatch) and trials >= 1000.
struct McEstimate {
  std::size_t degree = 0;
  std::vector<double> mean_coeffs;    // E[e_k], k = 0..degree
  std::vector<double> stderr_coeffs;  // standard error per coefficient
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

McEstimate mc_expected_charpoly(const std::vector<double>& a_diag,
                                const std::vector<double>& b_diag, Word word,
                                std::size_t trials, std::uint64_t seed);

/// Coefficientwise z-scores against an exact finite free prediction
/// (DegreeMismatch). Passes when every |z| is at or below the threshold.
struct McComparison {
  bool pass = true;
  std::vector<double> z;
  std::size_t first_fail_k = 0;
};

McComparison mc_compare(const McEstimate& est, const MonicPoly& exact, double z_threshold = 4.0);

std::string mc_report_json(const McEstimate& est, const MonicPoly& exact, Word word,
                           double z_threshold = 4.0);

}  // namespace finfree
