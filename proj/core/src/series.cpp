#include "mpr/series.hpp"

#include "mpr/weights.hpp"

#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace mpr {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
const cplx I(0.0, 1.0);
}  // namespace

CouplingSeries::CouplingSeries(Variable v, int order) : var_(v) {
  if (order < 0) throw std::invalid_argument("CouplingSeries: negative order");
  c_.assign(static_cast<std::size_t>(order + 1), 0.0);
  e_.assign(static_cast<std::size_t>(order + 1), 0.0);
}

CouplingSeries CouplingSeries::monomial(Variable v, int order, int power, cplx coeff) {
  CouplingSeries s(v, order);
  if (power >= 0 && power <= order) s.set(power, coeff);
  return s;
}

void CouplingSeries::set(int n, cplx value, double error) {
  if (n < 0 || n > order()) throw std::out_of_range("CouplingSeries::set");
  c_[static_cast<std::size_t>(n)] = value;
  e_[static_cast<std::size_t>(n)] = error;
}

void CouplingSeries::check(const CouplingSeries& o) const {
  if (o.var_ != var_) throw std::invalid_argument("CouplingSeries: mismatched variables");
}

CouplingSeries CouplingSeries::operator+(const CouplingSeries& o) const {
  check(o);
  CouplingSeries r(var_, std::min(order(), o.order()));
  for (int n = 0; n <= r.order(); ++n) {
    const cplx v = coeff(n) + o.coeff(n);
    r.set(n, v, std::hypot(std::hypot(error(n), o.error(n)), kEps * std::abs(v)));
  }
  return r;
}

CouplingSeries CouplingSeries::operator-(const CouplingSeries& o) const { return *this + o * cplx(-1.0); }

CouplingSeries CouplingSeries::operator*(const CouplingSeries& o) const {
  check(o);
  CouplingSeries r(var_, std::min(order(), o.order()));
  for (int n = 0; n <= r.order(); ++n) {
    cplx v = 0.0;
    double var = 0.0, mag = 0.0;
    for (int i = 0; i <= n; ++i) {
      const cplx a = coeff(i), b = o.coeff(n - i);
      v += a * b;
      var += std::norm(b) * error(i) * error(i) + std::norm(a) * o.error(n - i) * o.error(n - i);
      mag += std::abs(a) * std::abs(b);
    }
    const double round = 4.0 * kEps * mag;
    r.set(n, v, std::sqrt(var + round * round));
  }
  return r;
}

CouplingSeries CouplingSeries::operator*(cplx s) const {
  CouplingSeries r(var_, order());
  for (int n = 0; n <= order(); ++n)
    r.set(n, coeff(n) * s, std::hypot(error(n) * std::abs(s), kEps * std::abs(coeff(n) * s)));
  return r;
}

CouplingSeries CouplingSeries::shifted(int k) const {
  CouplingSeries r(var_, order());
  for (int n = 0; n <= order(); ++n)
    if (n - k >= 0 && n - k <= order()) r.set(n, coeff(n - k), error(n - k));
  return r;
}

CouplingSeries CouplingSeries::reciprocal() const {
  if (coeff(0) == 0.0) throw std::domain_error("CouplingSeries::reciprocal: zero constant term");
  CouplingSeries d(var_, order());
  const cplx inv = 1.0 / coeff(0);
  std::vector<cplx> v(static_cast<std::size_t>(order() + 1));
  std::vector<double> mag(static_cast<std::size_t>(order() + 1));
  v[0] = inv;
  mag[0] = std::abs(inv);
  for (int n = 1; n <= order(); ++n) {
    cplx s = 0.0;
    double m = 0.0;
    for (int k = 1; k <= n; ++k) {
      s += coeff(k) * v[static_cast<std::size_t>(n - k)];
      m += std::abs(coeff(k)) * mag[static_cast<std::size_t>(n - k)];
    }
    v[static_cast<std::size_t>(n)] = -inv * s;
    mag[static_cast<std::size_t>(n)] = std::abs(inv) * m;
  }
  for (int n = 0; n <= order(); ++n) {
    // d(1/a) = -(1/a)^2 da
    double var = 0.0;
    for (int k = 0; k <= n; ++k) {
      cplx sq = 0.0;
      for (int i = 0; i <= n - k; ++i) sq += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(n - k - i)];
      var += std::norm(sq) * error(k) * error(k);
    }
    const double round = 4.0 * kEps * (n + 1) * mag[static_cast<std::size_t>(n)];
    d.set(n, v[static_cast<std::size_t>(n)], std::sqrt(var + round * round));
  }
  return d;
}

CouplingSeries CouplingSeries::truncated(int order_) const {
  CouplingSeries r(var_, order_);
  for (int n = 0; n <= std::min(order_, order()); ++n) r.set(n, coeff(n), error(n));
  return r;
}

std::string CouplingSeries::variable_name(Variable v) {
  switch (v) {
    case Variable::minus_g: return "-g";
    case Variable::t: return "t";
    case Variable::inverse_s: return "1/s";
  }
  return "?";
}

std::vector<double> reciprocal_gamma_coefficients(int n) {
  std::vector<double> a(static_cast<std::size_t>(std::max(n, 2) + 1), 0.0);
  a[1] = 1.0;
  a[2] = kEulerGamma;
  for (int k = 3; k <= n; ++k) {
    double s = kEulerGamma * a[static_cast<std::size_t>(k - 1)];
    for (int j = 2; j <= k - 1; ++j)
      s += ((j % 2) ? 1.0 : -1.0) * boost::math::zeta(static_cast<double>(j)) * a[static_cast<std::size_t>(k - j)];
    a[static_cast<std::size_t>(k)] = s / (k - 1);
  }
  a.resize(static_cast<std::size_t>(n + 1));
  return a;
}

ReciprocalGammaExpansion::ReciprocalGammaExpansion(int r, int order) : r_(r) {
  if (r < 1 || order < 0) throw std::invalid_argument("ReciprocalGammaExpansion: need r >= 1, order >= 0");
  const auto a = reciprocal_gamma_coefficients(order + 1);
  std::vector<double> b(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) b[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k + 1)];
  // 1/Gamma(r + e) = 1/Gamma(1 + e) / prod_{j<r} (j + e)
  for (int j = 1; j < r; ++j) {
    std::vector<double> q(b.size());
    q[0] = b[0] / j;
    for (std::size_t k = 1; k < b.size(); ++k) q[k] = (b[k] - q[k - 1]) / j;
    b = std::move(q);
  }
  const cplx step = -I / (2.0 * kPi);
  cplx f = 1.0;
  for (int p = 0; p <= order; ++p) {
    c_.push_back(b[static_cast<std::size_t>(p)] * f);
    f *= step;
  }
}

CouplingSeries ReciprocalGammaExpansion::as_series() const {
  CouplingSeries s(CouplingSeries::Variable::t, order());
  for (int p = 0; p <= order(); ++p) s.set(p, c_[static_cast<std::size_t>(p)], 8.0 * kEps * std::abs(c_[static_cast<std::size_t>(p)]));
  return s;
}

namespace {

struct Weighted {
  DirectedMultigraph graph;
  double weight = 0.0;
};

Estimate weighted_sum(const std::map<std::string, Weighted>& groups, IntegralCache& cache, double scale) {
  Estimate e;
  double var = 0.0;
  for (const auto& [key, w] : groups) {
    const IntegralEstimate x = cache.get(w.graph);
    e.value += w.weight * x.value;
    var += (w.weight * x.std_error) * (w.weight * x.std_error);
  }
  e.value *= scale;
  e.error = std::sqrt(var) * std::abs(scale);
  return e;
}

}  // namespace

CoefficientTable compute_coefficients(int order, IntegralCache& cache, IntegralCache& leg_cache) {
  if (order < 0 || order > 6) throw std::invalid_argument("compute_coefficients: order must be in 0..6");
  CoefficientTable t;
  t.order = order;
  t.samples = cache.samples();
  t.seed = cache.seed();
  for (int r = 0; r <= order; ++r) {
    OrderCoefficients row;
    row.r = r;
    if (r >= 2) {
      std::map<std::string, Weighted> vac, vac_alt, cut, legs;
      for (const auto& f : enumerate_phi4(r)) {
        const DirectedMultigraph g = DirectedMultigraph::from_matrix(f);
        const double a1 = to_double(wei_partition(f).coefficient_of_m(1));
        const double closed = to_double(Rational(cofactor(f), mult(f)));
        auto add = [](std::map<std::string, Weighted>& m, const DirectedMultigraph& h, double w) {
          auto [it, fresh] = m.try_emplace(undirected_key(h), Weighted{h, 0.0});
          it->second.weight += w;
        };
        add(vac, g, a1);
        add(vac_alt, g, closed);
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
          add(cut, delete_edge(g, e), a1);
          add(legs, open_outer_vertices(subdivide_edge(g, e)), a1);
        }
      }
      const double rf = std::tgamma(r + 1.0);
      const double four_pi = 4.0 * kPi;
      row.gamma0_r1 = weighted_sum(vac, cache, 1.0 / (rf * std::pow(four_pi, r + 1)));
      // I(F) = 16^r Gamma_G(0) / (4 pi)^(r+1) in the cofactor form.
      row.gamma0_r1_alt = weighted_sum(vac_alt, cache, std::pow(16.0, r) / (rf * std::pow(8.0, r) * std::pow(four_pi, r + 1)));
      row.gC_r0 = weighted_sum(cut, cache, 1.0 / (rf * std::pow(four_pi, r)));
      row.gC_r0_alt = weighted_sum(legs, leg_cache, 1.0 / (rf * std::pow(four_pi, r)));
    }
    t.rows.push_back(row);
  }
  return t;
}

namespace {

using V = CouplingSeries::Variable;

CouplingSeries stream(const CoefficientTable& t, Estimate OrderCoefficients::*field) {
  CouplingSeries s(V::minus_g, t.order);
  for (const auto& row : t.rows) s.set(row.r, (row.*field).value, (row.*field).error);
  return s;
}

CouplingSeries exp_linear(cplx a, int order) {
  CouplingSeries s(V::t, order);
  cplx term = 1.0;
  for (int n = 0; n <= order; ++n) {
    s.set(n, term, kEps * std::abs(term));
    term *= a / double(n + 1);
  }
  return s;
}

// x^shift * value * factor * base, with the uncertainty of value carried along.
CouplingSeries scaled(const CouplingSeries& base, const Estimate& value, cplx factor, int shift) {
  CouplingSeries k(V::t, base.order());
  k.set(0, value.value * factor, value.error * std::abs(factor));
  return (base * k).shifted(shift);
}

}  // namespace

CouplingSeries gamma0_series(const CoefficientTable& t) { return stream(t, &OrderCoefficients::gamma0_r1); }

CouplingSeries gC_series(const CoefficientTable& t) { return stream(t, &OrderCoefficients::gC_r0); }

CouplingSeries sigmaU_m0(const CoefficientTable& t) {
  CouplingSeries num(V::minus_g, t.order);
  for (const auto& row : t.rows)
    if (row.r >= 2 && row.r + 1 <= t.order)
      num.set(row.r + 1, 2.0 * (row.r - 1) * row.gamma0_r1.value, 2.0 * (row.r - 1) * row.gamma0_r1.error);
  // 1 + g/(2 pi) = 1 - x/(2 pi) with x = -g
  CouplingSeries den = CouplingSeries::monomial(V::minus_g, t.order, 0) +
                       CouplingSeries::monomial(V::minus_g, t.order, 1, -1.0 / (2.0 * kPi));
  return num * den.reciprocal();
}

CouplingSeries g2_series(const CoefficientTable& t) {
  return CouplingSeries::monomial(V::minus_g, t.order, 0) + gC_series(t) + sigmaU_m0(t);
}

CouplingSeries gamma2_series(const CoefficientTable& t) { return g2_series(t).reciprocal(); }

CouplingSeries phi_series(int which, const CoefficientTable& t, int order) {
  if (which != 0 && which != 2) throw std::invalid_argument("phi_series: which must be 0 or 2");
  if (t.order < order) throw std::invalid_argument("phi_series: coefficient table is shorter than the requested order");
  const auto rg = [&](int r) { return ReciprocalGammaExpansion(r, order).as_series(); };
  if (which == 0) {
    CouplingSeries bracket = rg(1);
    for (const auto& row : t.rows) {
      if (row.r < 2 || row.r > order) continue;
      const cplx f = 4.0 * kPi * (row.r - 1) * std::pow(-I, row.r);
      bracket = bracket + scaled(rg(row.r), row.gamma0_r1, f, row.r);
    }
    return exp_linear(I * kEulerGamma / (2.0 * kPi), order) * bracket;
  }
  CouplingSeries bracket = rg(2);
  for (const auto& row : t.rows) {
    if (row.r < 2 || row.r > order) continue;
    bracket = bracket + scaled(rg(row.r + 2), row.gC_r0, (row.r + 1.0) * std::pow(-I, row.r), row.r);
    bracket = bracket + scaled(rg(row.r + 2), row.gamma0_r1, 2.0 * (row.r - 1) * std::pow(-I, row.r + 1), row.r + 1);
  }
  return exp_linear(I * (kEulerGamma - 1.0) / (2.0 * kPi), order) * bracket;
}

std::vector<cplx> moments_from_series(const CouplingSeries& phi) {
  std::vector<cplx> m;
  double fact = 1.0;
  for (int j = 0; j <= phi.order(); ++j) {
    if (j > 0) fact *= j;
    m.push_back(fact * phi.coeff(j) / std::pow(I, j));
  }
  return m;
}

std::vector<double> moment_errors_from_series(const CouplingSeries& phi) {
  std::vector<double> e;
  double fact = 1.0;
  for (int j = 0; j <= phi.order(); ++j) {
    if (j > 0) fact *= j;
    e.push_back(fact * phi.error(j));
  }
  return e;
}

}  // namespace mpr
