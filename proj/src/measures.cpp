#include "finfree/measures.hpp"

#include <sstream>

#include "json.hpp"

namespace finfree {

MomentSeq::MomentSeq(std::size_t ord, std::vector<Rational> moments)
    : order(ord), m(std::move(moments)) {
  require(m.size() == order + 1, errc::invalid_parameter, "moment sequence needs order+1 values");
  require(m[0] == 1, errc::invalid_parameter, "m_0 must be 1");
}

bool operator==(const MomentSeq& a, const MomentSeq& b) {
  return a.order == b.order && a.m == b.m;
}

namespace {

// C[s][r] = sum over s-tuples of nonnegative indices summing to r of products
// of moments; the workhorse of the moment-cumulant recursion
//   m_n = sum_{s=1}^n kappa_s * C[s][n-s].
std::vector<std::vector<Rational>> tuple_sums(const std::vector<Rational>& m, std::size_t order) {
  std::vector<std::vector<Rational>> C(order + 1, std::vector<Rational>(order + 1, Rational(0)));
  C[0][0] = 1;
  for (std::size_t s = 1; s <= order; ++s)
    for (std::size_t r = 0; r <= order; ++r)
      for (std::size_t j = 0; j <= r; ++j) C[s][r] += C[s - 1][r - j] * m[j];
  return C;
}

}  // namespace

std::vector<Rational> moments_to_cumulants(const MomentSeq& mu) {
  std::size_t K = mu.order;
  std::vector<Rational> kappa(K + 1, Rational(0));
  std::vector<std::vector<Rational>> C = tuple_sums(mu.m, K);
  for (std::size_t n = 1; n <= K; ++n) {
    Rational acc = mu.m[n];
    for (std::size_t s = 1; s < n; ++s) acc -= kappa[s] * C[s][n - s];
    kappa[n] = acc;  // C[n][0] = 1
  }
  return kappa;
}

MomentSeq cumulants_to_moments(const std::vector<Rational>& kappa) {
  require(!kappa.empty(), errc::invalid_parameter, "cumulant vector is empty");
  std::size_t K = kappa.size() - 1;
  MomentSeq mu(K);
  for (std::size_t n = 1; n <= K; ++n) {
    // rebuild the tuple sums from the moments known so far
    std::vector<std::vector<Rational>> C = tuple_sums(mu.m, n - 1);
    Rational acc = kappa[n];  // s = n term, C[n][0] = 1
    for (std::size_t s = 1; s < n; ++s) acc += kappa[s] * C[s][n - s];
    mu.m[n] = acc;
  }
  return mu;
}

MomentSeq free_add(const MomentSeq& mu, const MomentSeq& nu) {
  require(mu.order == nu.order, errc::order_mismatch,
          "operands have orders " + std::to_string(mu.order) + " and " +
              std::to_string(nu.order));
  std::vector<Rational> ka = moments_to_cumulants(mu);
  std::vector<Rational> kb = moments_to_cumulants(nu);
  for (std::size_t i = 0; i < ka.size(); ++i) ka[i] += kb[i];
  return cumulants_to_moments(ka);
}

MomentSeq dilate_measure(const MomentSeq& mu, const Rational& alpha) {
  require(alpha != 0, errc::zero_scale, "dilation by zero");
  MomentSeq out = mu;
  Rational pw(1);
  for (std::size_t j = 1; j <= out.order; ++j) {
    pw *= alpha;
    out.m[j] *= pw;
  }
  return out;
}

namespace {

void require_even_measure(const MomentSeq& mu) {
  for (std::size_t j = 1; j <= mu.order; j += 2)
    require(mu.m[j] == 0, errc::non_symmetric_input,
            "odd moment m_" + std::to_string(j) + " is nonzero");
}

}  // namespace

MomentSeq dilate_even_measure(const MomentSeq& mu, const Rational& c) {
  require(c != 0, errc::zero_scale, "dilation by zero");
  require_even_measure(mu);
  MomentSeq out = mu;
  Rational pw(1);
  for (std::size_t j = 2; j <= out.order; j += 2) {
    pw *= c;
    out.m[j] *= pw;
  }
  return out;
}

MomentSeq sym_measure(const MomentSeq& mu) {
  return free_add(mu, dilate_measure(mu, Rational(-1)));
}

MomentSeq q_measure(const MomentSeq& mu) {
  require_even_measure(mu);
  MomentSeq out(mu.order / 2);
  for (std::size_t j = 0; j <= out.order; ++j) out.m[j] = mu.m[2 * j];
  return out;
}

MomentSeq sqrt_measure(const MomentSeq& nu) {
  MomentSeq out(2 * nu.order);
  for (std::size_t j = 0; j <= nu.order; ++j) out.m[2 * j] = nu.m[j];
  return out;
}

MomentSeq s_rational_moments(const SRationalSpec& spec, std::size_t order) {
  for (const auto& b : spec.upper)
    require(b != 0, errc::pole_at_origin, "upper entry 0 puts a pole at the origin");
  require(order >= 1, errc::invalid_parameter, "order must be at least 1");
  std::vector<Rational> den = spec.upper;
  den.emplace_back(1);  // the z+1 factor
  TruncatedSeries s = series_rational(spec.lower, den, order - 1);
  TruncatedSeries minv(order);
  for (std::size_t j = 0; j < order; ++j) minv.c[j + 1] = s.c[j];
  TruncatedSeries mser = series_revert(minv);
  MomentSeq out(order);
  for (std::size_t j = 1; j <= order; ++j) out.m[j] = mser.c[j];
  return out;
}

MomentSeq s_rational_even_moments(const SRationalSpec& spec, std::size_t order) {
  MomentSeq base = s_rational_moments(spec, order);
  MomentSeq doubled = sqrt_measure(base);
  MomentSeq out(order);
  for (std::size_t j = 0; j <= order; ++j) out.m[j] = doubled.m[j];
  return out;
}

LimitCompareReport limit_compare(const std::vector<MonicPoly>& seq, const MomentSeq& target,
                                 std::size_t jmax) {
  require(jmax <= target.order, errc::order_mismatch, "jmax exceeds the target order");
  LimitCompareReport rep;
  std::vector<std::vector<Rational>> gaps(jmax + 1);
  for (const auto& p : seq) {
    std::vector<Rational> emp = empirical_moments(p, jmax);
    for (std::size_t j = 1; j <= jmax; ++j) {
      LimitCompareRow row;
      row.degree = p.degree();
      row.j = j;
      row.empirical = emp[j];
      row.target = target.m[j];
      row.gap = abs(emp[j] - target.m[j]);
      gaps[j].push_back(row.gap);
      rep.rows.push_back(row);
    }
  }
  for (std::size_t j = 1; j <= jmax; ++j) {
    for (std::size_t i = 1; i < gaps[j].size(); ++i) {
      if (gaps[j][i] > gaps[j][i - 1]) {
        rep.flags.push_back("gap for moment " + std::to_string(j) +
                            " grows from sequence entry " + std::to_string(i - 1) + " to " +
                            std::to_string(i));
      }
    }
  }
  rep.monotone = rep.flags.empty();
  return rep;
}

std::string limit_compare_to_csv(const LimitCompareReport& rep) {
  std::ostringstream out;
  out << "degree,j,empirical,target,gap\n";
  for (const auto& row : rep.rows) {
    out << row.degree << "," << row.j << "," << to_string(row.empirical) << ","
        << to_string(row.target) << "," << to_string(row.gap) << "\n";
  }
  return out.str();
}

std::string moments_to_json(const MomentSeq& mu) {
  nlohmann::ordered_json j;
  j["order"] = mu.order;
  j["moments"] = to_strings(mu.m);
  return j.dump();
}

MomentSeq moments_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  require(!j.is_discarded(), errc::parse_error, "invalid JSON");
  require(j.contains("order") && j.contains("moments"), errc::parse_error,
          "moment JSON needs order and moments");
  return MomentSeq(j["order"].get<std::size_t>(),
                   parse_rationals(j["moments"].get<std::vector<std::string>>()));
}

}  // namespace finfree
