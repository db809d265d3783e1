#include "mpr/edge.hpp"

#include "mpr/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mpr {

namespace {
const cplx I(0.0, 1.0);
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

LipatovConstants LipatovConstants::defaults() {
  LipatovConstants c;
  c.I4 = 8.0 * kPi * kReferenceInverseTwoPiA;
  c.provenance = "I4 back-solved from 1/(2 pi A) = 0.933112776025; I1, I6, DL, DT must be supplied";
  return c;
}

void LipatovConstants::require(const std::string& names) const {
  std::istringstream in(names);
  std::string n;
  while (in >> n) {
    const std::optional<double>* v = n == "I1" ? &I1 : n == "I4" ? &I4 : n == "I6" ? &I6 : n == "DL" ? &DL : n == "DT" ? &DT : nullptr;
    if (!v) throw std::invalid_argument("unknown Lipatov constant " + n);
    if (!v->has_value()) throw std::invalid_argument("Lipatov constant " + n + " is not set; supply it in the config");
    if (!(**v > 0.0)) throw std::invalid_argument("Lipatov constant " + n + " must be positive");
  }
}

double LipatovConstants::A() const {
  require("I4");
  return 4.0 / *I4;
}

double LipatovConstants::inverse_two_pi_A() const { return 1.0 / (kTwoPi * A()); }

double LipatovConstants::mu0() const { return 2.5 - inverse_two_pi_A(); }

double LipatovConstants::mu2() const { return 1.5 - inverse_two_pi_A(); }

double LipatovConstants::xi0() const { return xi_M(0, 0.0, 2.0, *this); }

double LipatovConstants::xi2() const { return xi_M(2, 0.0, 2.0, *this); }

double xi_M(int M, double N, double d, const LipatovConstants& c) {
  c.require("I4 I6 DL DT");
  if (!(*c.I6 > *c.I4)) throw std::invalid_argument("xi_M: needs I6 > I4");
  return std::pow(2.0, N - 1.0) / std::pow(kTwoPi, (N + d + 1.0) / 2.0) * std::pow((*c.I6 - *c.I4) / d, d / 2.0) *
         std::pow(4.0 / *c.I4, (M + d) / 2.0) * std::pow(*c.DL, -0.5) * std::pow(*c.DT, -(N - 1.0) / 2.0);
}

cplx phi_as_shape(int which, cplx t, double A) {
  const cplx z = -I * A * t;
  if (which == 0) {
    return 8.0 * kPi * std::tgamma(1.5) * std::exp(I * kEulerGamma * t / kTwoPi) *
           hyp2f1_regularized(1.0, 1.5, -I * t / kTwoPi, z);
  }
  if (which == 2) {
    return std::tgamma(2.5) * std::exp(I * (kEulerGamma - 1.0) * t / kTwoPi) *
           hyp2f1_regularized(1.0, 2.5, 2.0 - I * t / kTwoPi, z);
  }
  throw std::invalid_argument("phi_as: which must be 0 or 2");
}

cplx phi_as(int which, cplx t, const LipatovConstants& c) {
  if (which == 0) return c.xi0() * phi_as_shape(0, t, c.A());
  c.require("I1");
  return c.xi2() * *c.I1 * *c.I1 * phi_as_shape(which, t, c.A());
}

namespace {

struct EdgeParams {
  double A, mu, log_prefactor;
};

EdgeParams edge_params(int which, const LipatovConstants& c) {
  const double A = c.A(), k = c.inverse_two_pi_A();
  if (which == 0) return {A, c.mu0(), -kEulerGamma * k + std::log(8.0 * kPi * c.xi0() / A)};
  if (which == 2) {
    c.require("I1");
    return {A, c.mu2(), (1.0 - kEulerGamma) * k + std::log(*c.I1 * *c.I1 * c.xi2() / A)};
  }
  throw std::invalid_argument("edge_density: which must be 0 or 2");
}

}  // namespace

double edge_density(int which, double x, const LipatovConstants& c) {
  if (!(x < 0.0)) throw std::domain_error("edge_density: x must be negative");
  const EdgeParams p = edge_params(which, c);
  return std::exp(p.log_prefactor + (p.mu - 1.0) * std::log(-x / p.A) + x / p.A);
}

double edge_log_shape_residual(int which, double x, const LipatovConstants& c) {
  const EdgeParams p = edge_params(which, c);
  return std::log(edge_density(which, x, c)) - x / p.A - (p.mu - 1.0) * std::log(-x / p.A);
}

std::vector<cplx> phi_as_taylor(int which, double A, int n, double radius, int points) {
  std::vector<cplx> f(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) f[static_cast<std::size_t>(j)] = phi_as_shape(which, std::polar(radius, kTwoPi * j / points), A);
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < points; ++j) s += f[static_cast<std::size_t>(j)] * std::polar(1.0, -kTwoPi * j * k / points);
    c[static_cast<std::size_t>(k)] = s / (double(points) * std::pow(radius, k));
  }
  return c;
}

std::vector<cplx> gamma_basis_coefficients(int which, double A, int n) {
  if (which != 0 && which != 2) throw std::invalid_argument("gamma_basis_coefficients: which must be 0 or 2");
  const double shift = which == 0 ? kEulerGamma : kEulerGamma - 1.0;
  const double radius = 0.5 / A;
  const int points = 512;
  std::vector<cplx> f(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const cplx t = std::polar(radius, kTwoPi * j / points);
    f[static_cast<std::size_t>(j)] = phi_as_shape(which, t, A) * std::exp(-I * shift * t / kTwoPi);
  }
  std::vector<cplx> taylor(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < points; ++j) s += f[static_cast<std::size_t>(j)] * std::polar(1.0, -kTwoPi * j * k / points);
    taylor[static_cast<std::size_t>(k)] = s / (double(points) * std::pow(radius, k));
  }
  const int R0 = which == 0 ? 0 : 2;
  const int first = which == 0 ? 1 : 0;
  std::vector<std::vector<cplx>> rg(static_cast<std::size_t>(n + 1));
  for (int m = first; m <= n; ++m) {
    const ReciprocalGammaExpansion e(m + R0, n);
    for (int p = 0; p <= n; ++p) rg[static_cast<std::size_t>(m)].push_back(e.coefficient(p));
  }
  std::vector<cplx> B(static_cast<std::size_t>(n + 1), 0.0);
  for (int k = first; k <= n; ++k) {
    cplx rest = taylor[static_cast<std::size_t>(k)];
    for (int m = first; m < k; ++m)
      rest -= B[static_cast<std::size_t>(m)] * std::pow(-I, m) * rg[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - m)];
    B[static_cast<std::size_t>(k)] = rest / (std::pow(-I, k) * rg[static_cast<std::size_t>(k)][0]);
  }
  return B;
}

RatioCheck lipatov_ratio_check(int which, double A, int r_from, int r_to, double tol) {
  RatioCheck out;
  const auto B = gamma_basis_coefficients(which, A, r_to + 1);
  const auto growth = [&](int r) {
    if (which == 0) return std::log(r - 1.0) + std::lgamma(r + 0.5) + r * std::log(A);
    return std::log(r + 1.0) + std::lgamma(r + 1.5) + r * std::log(A);
  };
  out.pass = true;
  for (int r = r_from; r <= r_to; ++r) {
    const double obs = std::abs(B[static_cast<std::size_t>(r + 1)] / B[static_cast<std::size_t>(r)]);
    const double pred = std::exp(growth(r + 1) - growth(r));
    out.r.push_back(r);
    out.observed.push_back(obs);
    out.predicted.push_back(pred);
    out.rel_diff.push_back(std::abs(obs / pred - 1.0));
    out.pass = out.pass && out.rel_diff.back() <= tol;
  }
  return out;
}

std::vector<double> taylor_ratio_trend(const std::vector<cplx>& c) {
  std::vector<double> r;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) r.push_back(c[k] == 0.0 ? 0.0 : std::abs(c[k + 1] / c[k]));
  return r;
}

SingularityCheck singularity_check(int which, const LipatovConstants& c) {
  const double A = c.A();
  const double mu = which == 0 ? c.mu0() : c.mu2();
  SingularityCheck out;
  // f(x) = C (-x/A)^{mu-1} e^{x/A} has Fourier transform A C Gamma(mu) (1 + iAt)^{-mu}.
  const EdgeParams p = edge_params(which, c);
  out.expected = A * std::exp(p.log_prefactor) * std::tgamma(mu);
  // Approach t = i/A along the imaginary axis with 1 + iAt = eps. The
  // remainder carries eps, eps^mu and eps ln(eps) (the exponent c-a-b moves
  // with t); fit them out.
  const auto g = [&](double eps) { return phi_as(which, I * (1.0 - eps) / A, c) * std::pow(eps, mu); };
  const double eps[4] = {1e-5, 5e-6, 2.5e-6, 1.25e-6};
  cplx m[4][5];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = 1.0;
    m[i][1] = eps[i];
    m[i][2] = std::pow(eps[i], mu);
    m[i][3] = eps[i] * std::log(eps[i]);
    m[i][4] = g(eps[i]);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int i = col + 1; i < 4; ++i)
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    std::swap(m[col], m[piv]);
    for (int i = 0; i < 4; ++i) {
      if (i == col) continue;
      const cplx f = m[i][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[i][k] -= f * m[col][k];
    }
  }
  out.limit = m[0][4] / m[0][0];
  out.rel_diff = std::abs(out.limit / out.expected - 1.0);
  return out;
}

}  // namespace mpr
