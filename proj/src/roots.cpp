#include "finfree/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace finfree {

namespace {

// Dense exact polynomials in ascending monomial order. Zero polynomial is the
// empty vector; here everything stays a byproduct of monic inputs.
using Dense = std::vector<Rational>;

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t deg(const Dense& f) { return f.empty() ? 0 : f.size() - 1; }

Dense derivative(const Dense& f) {
  Dense d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * f[i]);
  trim(d);
  return d;
}

Rational eval(const Dense& f, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

// Divides out the (positive) content, preserving signs.
void normalize_content(Dense& f) {
  trim(f);
  if (f.empty()) return;
  mpz_class g(0);
  mpz_class l(1);
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale = Rational(l) / Rational(g);
  for (auto& c : f) c *= scale;
}

void normalize_primitive(Dense& f) {
  normalize_content(f);
  if (!f.empty() && f.back() < 0)
    for (auto& c : f) c = -c;
}

Dense remainder(Dense a, const Dense& b) {
  while (!a.empty() && a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b) {
  normalize_primitive(a);
  normalize_primitive(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    normalize_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Dense squarefree_part(const Dense& f) {
  Dense g = poly_gcd(f, derivative(f));
  if (deg(g) == 0) {
    Dense out = f;
    normalize_primitive(out);
    return out;
  }
  // Exact division f / g.
  Dense rem = f;
  Dense q(f.size() - g.size() + 1, Rational(0));
  while (!rem.empty() && rem.size() >= g.size()) {
    Rational c = rem.back() / g.back();
    std::size_t shift = rem.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] -= c * g[i];
    trim(rem);
  }
  normalize_primitive(q);
  return q;
}

std::vector<Dense> sturm_chain(const Dense& squarefree) {
  std::vector<Dense> chain;
  chain.push_back(squarefree);
  Dense d = derivative(squarefree);
  normalize_primitive(d);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (deg(chain.back()) > 0) {
    Dense r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    normalize_content(r);  // magnitude control only, signs must survive
    chain.push_back(r);
  }
  return chain;
}

int sign_of(const Rational& r) { return sgn(r); }

// Sign variations ignoring zeros.
std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<Dense>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) signs.push_back(sign_of(eval(f, x)));
  return variations(signs);
}

std::size_t variations_at_minus_inf(const std::vector<Dense>& chain) {
  std::vector<int> signs;
  for (const auto& f : chain) {
    int s = f.empty() ? 0 : sign_of(f.back());
    if (deg(f) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

std::size_t variations_at_plus_inf(const std::vector<Dense>& chain) {
  std::vector<int> signs;
  for (const auto& f : chain) signs.push_back(f.empty() ? 0 : sign_of(f.back()));
  return variations(signs);
}

struct DistinctCensus {
  std::size_t total = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

DistinctCensus distinct_census(const Dense& anypoly) {
  Dense sf = squarefree_part(anypoly);
  DistinctCensus out;
  if (deg(sf) == 0) return out;
  std::vector<Dense> chain = sturm_chain(sf);
  std::size_t vminf = variations_at_minus_inf(chain);
  std::size_t vpinf = variations_at_plus_inf(chain);
  std::size_t vzero = variations_at(chain, Rational(0));
  out.total = vminf - vpinf;
  out.positive = vzero - vpinf;
  out.zero = (eval(sf, Rational(0)) == 0) ? 1 : 0;
  out.negative = out.total - out.positive - out.zero;
  return out;
}

// Multiplicity-layer decomposition: g_0 = p, g_{j+1} = gcd(g_j, g_j').
// A root of multiplicity mu contributes one distinct root to g_0..g_{mu-1}.
std::vector<Dense> gcd_layers(const Dense& p) {
  std::vector<Dense> layers;
  Dense g = p;
  normalize_primitive(g);
  while (deg(g) >= 1) {
    layers.push_back(g);
    g = poly_gcd(g, derivative(g));
  }
  return layers;
}

}  // namespace

RootCertificate sturm_certificate(const MonicPoly& p) {
  Dense f = to_monomial(p);
  RootCertificate cert;
  cert.degree = p.degree();
  std::vector<Dense> layers = gcd_layers(f);
  cert.squarefree_applied = layers.size() > 1;
  bool first = true;
  for (const auto& layer : layers) {
    DistinctCensus c = distinct_census(layer);
    if (first) {
      cert.distinct_real = c.total;
      first = false;
    }
    cert.total_real_with_multiplicity += c.total;
    cert.count_positive += c.positive;
    cert.count_negative += c.negative;
    cert.count_zero += c.zero;
  }
  return cert;
}

bool all_roots_real(const RootCertificate& c) {
  return c.total_real_with_multiplicity == c.degree;
}

bool all_roots_real_nonnegative(const RootCertificate& c) {
  return all_roots_real(c) && c.count_negative == 0;
}

std::size_t roots_in_window(const MonicPoly& p, const Rational& lo, const Rational& hi) {
  require(lo < hi, errc::invalid_parameter, "window needs lo < hi");
  Dense f = to_monomial(p);
  std::size_t total = 0;
  for (const auto& layer : gcd_layers(f)) {
    Dense sf = squarefree_part(layer);
    if (deg(sf) == 0) continue;
    std::vector<Dense> chain = sturm_chain(sf);
    total += variations_at(chain, lo) - variations_at(chain, hi);
  }
  return total;
}

namespace {

double eval_complex_abs(const std::vector<double>& c, std::complex<double> z,
                        std::complex<double>* deriv_out) {
  std::complex<double> acc(0.0, 0.0);
  std::complex<double> dacc(0.0, 0.0);
  for (std::size_t i = c.size(); i-- > 0;) {
    dacc = dacc * z + acc;
    acc = acc * z + c[i];
  }
  if (deriv_out) *deriv_out = dacc;
  return std::abs(acc);
}

}  // namespace

NumericRootSet numeric_roots(const MonicPoly& p) {
  require(p.degree() <= 256, errc::degree_cap, "numeric root finder is capped at degree 256");
  std::size_t n = p.degree();

  // Exact power-of-two predilation keeps the double conversion finite when
  // coefficients are huge.
  std::vector<Rational> mono = to_monomial(p);
  long max_bits = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (mono[k] == 0) continue;
    long bits = static_cast<long>(mpz_sizeinbase(mono[k].get_num().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(mono[k].get_den().get_mpz_t(), 2));
    max_bits = std::max(max_bits, (bits) / static_cast<long>(n - k));
  }
  Rational back_scale(1);
  MonicPoly work = p;
  if (max_bits > 500) {
    Rational two(2);
    Rational shift = pow_rational(two, -max_bits);
    work = dilate(p, DilationScale::rational(shift));
    back_scale = pow_rational(two, max_bits);
  }

  std::vector<Rational> wm = to_monomial(work);
  std::vector<double> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = to_double(wm[i]);
  for (double x : c)
    require(std::isfinite(x), errc::invalid_parameter, "coefficients exceed double range");

  // Balance with a plain root-radius estimate before forming the companion.
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (c[k] == 0.0) continue;
    radius = std::max(radius, std::pow(std::abs(c[k]), 1.0 / double(n - k)));
  }
  if (radius <= 0.0) radius = 1.0;
  std::vector<double> b(n + 1);
  double pw = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    b[n - k] = c[n - k] / pw;  // q(y) = p(radius*y)/radius^n, coefficients b
    pw *= radius;
  }

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
  for (std::size_t i = 1; i < n; ++i) comp(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    comp(static_cast<long>(i), static_cast<long>(n - 1)) = -b[i] / b[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);

  NumericRootSet out;
  out.roots.resize(n);
  double bs = to_double(back_scale);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> z = solver.eigenvalues()(static_cast<long>(i)) * radius;
    // Newton polish against the double image of the exact coefficients.
    for (int it = 0; it < 32; ++it) {
      std::complex<double> acc(0.0, 0.0);
      std::complex<double> dacc(0.0, 0.0);
      for (std::size_t j = c.size(); j-- > 0;) {
        dacc = dacc * z + acc;
        acc = acc * z + c[j];
      }
      double r = std::abs(acc);
      if (r == 0.0 || std::abs(dacc) == 0.0) break;
      std::complex<double> delta = acc / dacc;
      if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) break;
      std::complex<double> next = z - delta;
      if (eval_complex_abs(c, next, nullptr) >= r) break;
      z = next;
    }
    out.roots[i] = z * bs;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> z = out.roots[i] / bs;
    worst = std::max(worst, eval_complex_abs(c, z, nullptr));
  }
  out.max_residual = worst;
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& bb) {
    if (a.real() != bb.real()) return a.real() < bb.real();
    return a.imag() < bb.imag();
  });
  return out;
}

std::string certificate_to_json(const RootCertificate& c) {
  nlohmann::ordered_json j;
  j["degree"] = c.degree;
  j["distinct_real"] = c.distinct_real;
  j["total_real_with_multiplicity"] = c.total_real_with_multiplicity;
  j["count_positive"] = c.count_positive;
  j["count_negative"] = c.count_negative;
  j["count_zero"] = c.count_zero;
  j["squarefree_applied"] = c.squarefree_applied;
  return j.dump();
}

std::string roots_to_csv(const NumericRootSet& r) {
  std::ostringstream out;
  out.precision(17);
  out << "re,im,multiplicity_hint\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    std::size_t hint = 0;
    double scale = std::max(1.0, std::abs(r.roots[i]));
    for (const auto& z : r.roots)
      if (std::abs(z - r.roots[i]) <= 1e-6 * scale) ++hint;
    out << r.roots[i].real() << "," << r.roots[i].imag() << "," << hint << "\n";
  }
  return out.str();
}

}  // namespace finfree
