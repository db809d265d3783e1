#include "mpr/transform.hpp"

#include "mpr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpr {

namespace {
const cplx I(0.0, 1.0);
constexpr double kTwoPi = 2.0 * kPi;

double factorial_d(int n) { return std::tgamma(n + 1.0); }
}  // namespace

cplx z_of_g(cplx g) { return -0.25 + I / g - I * std::log(g) / kTwoPi; }

cplx rho_of_g(cplx g) { return -I / (g * g) * (1.0 + g / kTwoPi); }

cplx mu_of_s(cplx s) { return 1.0 + I / (kTwoPi * s); }

cplx theta_kernel(int k, cplx g, double b) {
  if (g == 0.0) throw std::domain_error("theta_kernel: g = 0");
  if (b <= 0.0) throw std::domain_error("theta_kernel: b must be positive");
  return std::exp(-b * (double(k) + z_of_g(g) + I * std::log(b) / kTwoPi));
}

cplx h_kernel(double t, cplx s) { return std::exp(-t * s - I * t / kTwoPi * (std::log(t) + std::log(s))); }

bool in_region(int k, cplx g) { return g != 0.0 && z_of_g(g).real() + k > 0.0; }

double s_margin(cplx s) { return s.real() - std::arg(s) / kTwoPi; }

namespace {

TransformValue half_line(const ComplexIntegrand& f, double decay) {
  if (!(decay > 0.0)) throw std::domain_error("integrand does not decay on the half line");
  const QuadratureResult q = integrate_half_line(f, std::min(1.0, 1.0 / decay), 1e-12, 1e-15);
  return {q.value, q.error, q.evaluations};
}

}  // namespace

TransformValue P_mu(double mu, cplx s) {
  if (mu < 0.0) throw std::domain_error("P_mu: mu must be non-negative");
  if (s_margin(s) <= 0.0) throw std::domain_error("P_mu: s outside the convergence region");
  return half_line([&](double t) { return std::pow(t, mu) * h_kernel(t, s); }, s_margin(s));
}

std::vector<double> gamma_p_coeffs(double mu, int p) {
  if (p < 0) throw std::invalid_argument("gamma_p_coeffs: negative p");
  return {gamma_derivative(p, mu + p + 1.0) / factorial_d(p)};
}

std::vector<double> gamma_p_double_sum(double mu, int p, bool argument_from_r) {
  if (p < 0) throw std::invalid_argument("gamma_p_double_sum: negative p");
  std::vector<double> poly(static_cast<std::size_t>(p + 1), 0.0);
  for (int r = 0; r <= p; ++r) {
    const double x = mu + (argument_from_r ? r : p) + 1.0;
    for (int m = 0; m <= r; ++m) {
      const double sign = (m % 2) ? -1.0 : 1.0;
      poly[static_cast<std::size_t>(p - r + m)] +=
          sign * gamma_derivative(r - m, x) / (factorial_d(p - r) * factorial_d(m) * factorial_d(r - m));
    }
  }
  return poly;
}

cplx evaluate_in_log(const std::vector<double>& poly, cplx s) {
  const cplx y = std::log(s);
  cplx v = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * y + *it;
  return v;
}

cplx P_mu_asymptotic(double mu, cplx s, int q) {
  cplx sum = 0.0, f = 1.0;
  const cplx step = 1.0 / (kTwoPi * I * s);
  for (int p = 0; p <= q; ++p) {
    sum += f * evaluate_in_log(gamma_p_coeffs(mu, p), s);
    f *= step;
  }
  return sum * std::pow(s, -(mu + 1.0));
}

SlopeFit truncation_slope(double mu, int q, const std::vector<cplx>& s_values) {
  if (s_values.size() < 2) throw std::invalid_argument("truncation_slope: need at least two points");
  SlopeFit fit;
  fit.expected = -(mu + q + 2.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const cplx s : s_values) {
    const double e = std::abs(P_mu(mu, s).value - P_mu_asymptotic(mu, s, q));
    fit.abs_s.push_back(std::abs(s));
    fit.abs_error.push_back(e);
    const double x = std::log(std::abs(s)), y = std::log(e);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(s_values.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

namespace {

// c * u^a * (1 + i u / 2 pi)^{-b} with u = 1/s.
struct LadderTerm {
  cplx c;
  int a, b;
};

}  // namespace

cplx borel_rhs(cplx s, int R, int p) {
  if (p < 0) throw std::invalid_argument("borel_rhs: negative p");
  const cplx k = I / kTwoPi;
  std::vector<LadderTerm> terms{{1.0, R, 1}};
  for (int step = 0; step < p; ++step) {
    std::vector<LadderTerm> next;
    for (const auto& t : terms) {
      if (t.a != 0) next.push_back({t.c * double(t.a), t.a + 1, t.b + 1});
      next.push_back({-t.c * double(t.b) * k, t.a + 2, t.b + 2});
    }
    terms = std::move(next);
  }
  const cplx u = 1.0 / s, m = 1.0 + k * u;
  cplx v = 0.0;
  for (const auto& t : terms) v += t.c * std::pow(u, t.a) * std::pow(m, -t.b);
  return v;
}

namespace {

cplx richardson_derivative(const std::function<cplx(cplx)>& f, cplx s, double h) {
  // Central differences at h, h/2, h/4 combined to cancel h^2 and h^4.
  cplx d[3];
  for (int i = 0; i < 3; ++i) {
    const double hi = h / std::pow(2.0, i);
    d[i] = (f(s + hi) - f(s - hi)) / (2.0 * hi);
  }
  const cplx e1 = (4.0 * d[1] - d[0]) / 3.0, e2 = (4.0 * d[2] - d[1]) / 3.0;
  return (16.0 * e2 - e1) / 15.0;
}

}  // namespace

cplx borel_rhs_numeric(cplx s, int R, int p, double h) {
  std::function<cplx(cplx)> f = [R](cplx x) { return std::pow(x, -R) / mu_of_s(x); };
  for (int step = 0; step < p; ++step) {
    f = [f, h](cplx x) { return -richardson_derivative(f, x, h) / mu_of_s(x); };
  }
  return f(s);
}

TransformValue borel_lhs(cplx s, int R, int p) {
  if (s_margin(s) <= 0.5) throw std::domain_error("borel_lhs: need Re(s) - arg(s)/2pi > 1/2");
  const int power = R + p - 1;
  return half_line(
      [&](double b) { return std::pow(b, power) * h_kernel(b, s) * rgamma(double(R) - I * b / kTwoPi); },
      s_margin(s) - 0.25);
}

BorelCheck borel_identity(cplx s, int R, int p, double tol) {
  BorelCheck c;
  c.s = s;
  c.R = R;
  c.p = p;
  c.lhs = borel_lhs(s, R, p).value;
  c.rhs = borel_rhs(s, R, p);
  c.rel_diff = std::abs(c.lhs - c.rhs) / std::abs(c.rhs);
  c.pass = c.rel_diff <= tol;
  return c;
}

TruncatedPhi::TruncatedPhi(int which, const CoefficientTable& t, int order) : which_(which), order_(order) {
  if (which != 0 && which != 2) throw std::invalid_argument("TruncatedPhi: which must be 0 or 2");
  if (t.order < order) throw std::invalid_argument("TruncatedPhi: coefficient table is too short");
  const auto mi = [](int n) { return std::pow(-I, n); };
  if (which == 0) {
    terms_.push_back({1.0, 0, 1});
    for (const auto& row : t.rows)
      if (row.r >= 2 && row.r <= order)
        terms_.push_back({4.0 * kPi * row.gamma0_r1.value * (row.r - 1) * mi(row.r), row.r, row.r});
  } else {
    terms_.push_back({1.0, 0, 2});
    for (const auto& row : t.rows) {
      if (row.r < 2 || row.r > order) continue;
      terms_.push_back({row.gC_r0.value * (row.r + 1.0) * mi(row.r), row.r, row.r + 2});
      terms_.push_back({2.0 * row.gamma0_r1.value * (row.r - 1) * mi(row.r + 1), row.r + 1, row.r + 2});
    }
  }
}

cplx TruncatedPhi::bracket(double t) const {
  cplx v = 0.0;
  for (const auto& term : terms_) v += term.coeff * std::pow(t, term.power) * rgamma(double(term.R) - I * t / kTwoPi);
  return v;
}

cplx TruncatedPhi::operator()(double t) const {
  const double shift = which_ == 0 ? kEulerGamma : kEulerGamma - 1.0;
  return std::exp(I * shift * t / kTwoPi) * bracket(t);
}

TransformValue L_transform_numeric(int which, int k, cplx g, const PhiFunction& phi) {
  if (which != 0 && which != 2) throw std::invalid_argument("L_transform: which must be 0 or 2");
  if (!in_region(k, g)) throw std::domain_error("L_transform: g is outside R_k");
  const double decay = z_of_g(g).real() + k;
  if (which == 0)
    return half_line([&](double b) { return phi(b) * std::exp(-I * kEulerGamma * b / kTwoPi) * theta_kernel(k, g, b); },
                     decay);
  return half_line(
      [&](double b) { return b * phi(b) * std::exp(I * (1.0 - kEulerGamma) * b / kTwoPi) * theta_kernel(k, g, b); },
      decay);
}

cplx L_transform_termwise(const TruncatedPhi& phi, cplx g) {
  const double a = std::arg(g);
  if (!(a > 0.0 && a < kPi)) throw std::domain_error("L_transform_termwise: need 0 < arg g < pi");
  const cplx s = I / g;
  const int extra = phi.which() == 2 ? 1 : 0;
  cplx v = 0.0;
  for (const auto& t : phi.terms()) v += t.coeff * borel_rhs(s, t.R, t.power + extra + 1 - t.R);
  return v;
}

CouplingSeries derivative_in_s(const CouplingSeries& f) {
  CouplingSeries d(CouplingSeries::Variable::inverse_s, f.order() + 1);
  for (int n = 1; n <= f.order(); ++n) d.set(n + 1, -double(n) * f.coeff(n), n * f.error(n));
  return d;
}

CouplingSeries antiderivative_in_s(const CouplingSeries& f, cplx* log_residual) {
  if (f.coeff(0) != 0.0) throw std::domain_error("antiderivative_in_s: constant term integrates to s");
  if (log_residual) *log_residual = f.coeff(1);
  CouplingSeries a(CouplingSeries::Variable::inverse_s, std::max(0, f.order() - 1));
  for (int n = 2; n <= f.order(); ++n) a.set(n - 1, f.coeff(n) / (1.0 - n), f.error(n) / (n - 1.0));
  return a;
}

CouplingSeries L_asymptotic(int which, const CoefficientTable& t, int order) {
  using V = CouplingSeries::Variable;
  CouplingSeries phi = phi_series(which, t, order);
  CouplingSeries f(V::t, 0);
  const auto expo = [&](double c, int n) {
    CouplingSeries e(V::t, n);
    cplx term = 1.0;
    for (int j = 0; j <= n; ++j) {
      e.set(j, term);
      term *= I * c / (kTwoPi * (j + 1));
    }
    return e;
  };
  if (which == 0) {
    f = phi * expo(-kEulerGamma, order);
  } else {
    f = (phi * expo(1.0 - kEulerGamma, order)).truncated(order + 1).shifted(1);
  }
  // L = sum_k beta_k P_k(s), P_k = u^{k+1} sum_p gamma_p^{(k)} (u / 2 pi i)^p.
  const int top = f.order() + 1;
  CouplingSeries L(V::inverse_s, top);
  std::vector<double> var(static_cast<std::size_t>(top + 1), 0.0);
  std::vector<cplx> c(static_cast<std::size_t>(top + 1), 0.0);
  for (int k = 0; k <= f.order(); ++k) {
    cplx step = 1.0;
    for (int p = 0; k + 1 + p <= top; ++p) {
      const cplx w = gamma_p_coeffs(k, p)[0] * step;
      c[static_cast<std::size_t>(k + 1 + p)] += f.coeff(k) * w;
      var[static_cast<std::size_t>(k + 1 + p)] += std::norm(w) * f.error(k) * f.error(k);
      step /= kTwoPi * I;
    }
  }
  for (int n = 0; n <= top; ++n)
    L.set(n, c[static_cast<std::size_t>(n)], std::hypot(std::sqrt(var[static_cast<std::size_t>(n)]), 1e-15 * std::abs(c[static_cast<std::size_t>(n)])));
  return L;
}

ZetaClosure zeta_closure(int which, const CoefficientTable& t, int order) {
  using V = CouplingSeries::Variable;
  if (which != 0 && which != 2) throw std::invalid_argument("zeta_closure: which must be 0 or 2");
  if (order < 1) throw std::invalid_argument("zeta_closure: order must be at least 1");
  ZetaClosure out{CouplingSeries(V::minus_g, order), {}};
  const CouplingSeries L = L_asymptotic(which, t, order);
  const CouplingSeries mu =
      CouplingSeries::monomial(V::inverse_s, L.order(), 0) + CouplingSeries::monomial(V::inverse_s, L.order(), 1, I / kTwoPi);
  CouplingSeries eta(V::inverse_s, order);
  cplx res;
  if (which == 0) {
    const CouplingSeries a = mu * L - CouplingSeries::monomial(V::inverse_s, L.order(), 1);
    const CouplingSeries inner = antiderivative_in_s(a, &res);
    out.log_residuals.push_back(res);
    const CouplingSeries outer = antiderivative_in_s(mu.truncated(inner.order()) * inner, &res);
    out.log_residuals.push_back(res);
    eta = outer.truncated(order).shifted(1) * cplx(1.0 / (4.0 * kPi));
  } else {
    const CouplingSeries a = antiderivative_in_s(mu * L, &res);
    out.log_residuals.push_back(res);
    for (int n = 0; n <= order; ++n) eta.set(n, -a.coeff(n + 1), a.error(n + 1));
  }
  CouplingSeries z = which == 0 ? eta : eta.reciprocal();
  // u = 1/s = i (-g)
  cplx f = 1.0;
  for (int r = 0; r <= order; ++r) {
    out.zeta.set(r, z.coeff(r) * f, z.error(r));
    f *= I;
  }
  return out;
}

}  // namespace mpr
