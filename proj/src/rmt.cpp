#include "finfree/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "json.hpp"

namespace finfree {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 0x51ED2701A4D5E9F3ULL));
}

// Elementary symmetric functions of the eigenvalue multiset.
std::vector<std::complex<double>> elementary_from_eigen(
    const std::vector<std::complex<double>>& lam) {
  std::vector<std::complex<double>> e(lam.size() + 1, std::complex<double>(0.0, 0.0));
  e[0] = std::complex<double>(1.0, 0.0);
  std::size_t used = 0;
  for (const auto& l : lam) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += l * e[k - 1];
  }
  return e;
}

}  // namespace

Eigen::MatrixXcd sample_haar_unitary(std::size_t n, std::mt19937_64& rng) {
  require(n >= 1, errc::invalid_parameter, "dimension must be at least 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(static_cast<long>(n), static_cast<long>(n));
  for (long i = 0; i < g.rows(); ++i)
    for (long j = 0; j < g.cols(); ++j) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < q.cols(); ++j) {
    std::complex<double> d = r(j, j);
    double a = std::abs(d);
    std::complex<double> phase = (a > 0.0) ? d / a : std::complex<double>(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

Word word_from_string(const std::string& name) {
  if (name == "sum") return Word::sum;
  if (name == "product") return Word::product;
  if (name == "commutator") return Word::commutator;
  fail(errc::invalid_parameter, "unknown word '" + name + "'");
}

std::string word_to_string(Word w) {
  switch (w) {
    case Word::sum: return "sum";
    case Word::product: return "product";
    case Word::commutator: return "commutator";
  }
  return "?";
}

McEstimate mc_expected_charpoly(const std::vector<double>& a_diag,
                                const std::vector<double>& b_diag, Word word,
                                std::size_t trials, std::uint64_t seed) {
  require(a_diag.size() == b_diag.size(), errc::length_mismatch,
          "diagonals have lengths " + std::to_string(a_diag.size()) + " and " +
              std::to_string(b_diag.size()));
  require(!a_diag.empty(), errc::invalid_parameter, "diagonals are empty");
  require(trials >= 1000, errc::invalid_parameter, "need at least 1000 trials");
  std::size_t n = a_diag.size();
  long ln = static_cast<long>(n);

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(ln, ln);
  for (long i = 0; i < ln; ++i) A(i, i) = a_diag[static_cast<std::size_t>(i)];
  Eigen::VectorXd bvec(ln);
  for (long i = 0; i < ln; ++i) bvec(i) = b_diag[static_cast<std::size_t>(i)];

  std::vector<double> sum(n + 1, 0.0);
  std::vector<double> sumsq(n + 1, 0.0);
  const std::complex<double> iunit(0.0, 1.0);

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    Eigen::MatrixXcd U = sample_haar_unitary(n, rng);
    Eigen::MatrixXcd B = U * bvec.asDiagonal() * U.adjoint();

    std::vector<std::complex<double>> lam(n);
    if (word == Word::sum) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A + B, Eigen::EigenvaluesOnly);
      for (long i = 0; i < ln; ++i) lam[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    } else if (word == Word::commutator) {
      Eigen::MatrixXcd M = iunit * (A * B - B * A);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
      for (long i = 0; i < ln; ++i) lam[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    } else {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A * B, false);
      for (long i = 0; i < ln; ++i) lam[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    }
    std::vector<std::complex<double>> e = elementary_from_eigen(lam);
    for (std::size_t k = 0; k <= n; ++k) {
      double v = e[k].real();
      sum[k] += v;
      sumsq[k] += v * v;
    }
  }

  McEstimate out;
  out.degree = n;
  out.trials = trials;
  out.seed = seed;
  out.mean_coeffs.resize(n + 1);
  out.stderr_coeffs.resize(n + 1);
  double T = static_cast<double>(trials);
  for (std::size_t k = 0; k <= n; ++k) {
    double mean = sum[k] / T;
    double var = (sumsq[k] - T * mean * mean) / (T - 1.0);
    if (var < 0.0) var = 0.0;
    out.mean_coeffs[k] = mean;
    out.stderr_coeffs[k] = std::sqrt(var / T);
  }
  return out;
}

McComparison mc_compare(const McEstimate& est, const MonicPoly& exact, double z_threshold) {
  require(est.degree == exact.degree(), errc::degree_mismatch,
          "estimate degree " + std::to_string(est.degree) + " vs exact degree " +
              std::to_string(exact.degree()));
  McComparison cmp;
  cmp.z.resize(est.degree + 1, 0.0);
  for (std::size_t k = 0; k <= est.degree; ++k) {
    double target = to_double(exact.e[k]);
    double gap = std::abs(est.mean_coeffs[k] - target);
    double se = est.stderr_coeffs[k];
    // Coefficients that are invariants of the word (e.g. the trace of a sum)
    // have zero true variance; their sample spread is pure rounding noise, so
    // floor the denominator at the rounding scale instead of dividing noise
    // by noise.
    double scale = std::max({1.0, std::abs(est.mean_coeffs[k]), std::abs(target)});
    double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    double z = gap / std::max(se, floor);
    cmp.z[k] = z;
    if (z > z_threshold && cmp.pass) {
      cmp.pass = false;
      cmp.first_fail_k = k;
    }
  }
  return cmp;
}

std::string mc_report_json(const McEstimate& est, const MonicPoly& exact, Word word,
                           double z_threshold) {
  McComparison cmp = mc_compare(est, exact, z_threshold);
  nlohmann::ordered_json j;
  j["word"] = word_to_string(word);
  j["trials"] = est.trials;
  j["seed"] = est.seed;
  j["pass"] = cmp.pass;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k <= est.degree; ++k) {
    nlohmann::ordered_json row;
    row["k"] = k;
    row["mean"] = est.mean_coeffs[k];
    row["stderr"] = est.stderr_coeffs[k];
    row["exact"] = to_double(exact.e[k]);
    row["z"] = cmp.z[k];
    coeffs.push_back(row);
  }
  j["coeffs"] = coeffs;
  return j.dump();
}

}  // namespace finfree
