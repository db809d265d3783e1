#include "mpr/special.hpp"

#include <boost/math/special_functions/polygamma.hpp>

#include <cmath>
#include <stdexcept>

namespace mpr {

namespace {

const cplx I(0.0, 1.0);

cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  if (y > 1.0) return -I * kPi * z + std::log((std::exp(2.0 * I * kPi * z) - 1.0) / (2.0 * I));
  if (y < -1.0) return I * kPi * z + std::log((1.0 - std::exp(-2.0 * I * kPi * z)) / (2.0 * I));
  return std::log(std::sin(kPi * z));
}

cplx stirling(cplx z) {
  static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  cplx s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  const cplx z2 = z * z;
  cplx zp = z;
  for (int k = 1; k <= 8; ++k) {
    s += b[k - 1] / (2.0 * k * (2.0 * k - 1.0) * zp);
    zp *= z2;
  }
  return s;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole");
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

std::vector<double> gamma_taylor(double x, int n) {
  if (x <= 0.0) throw std::domain_error("gamma_taylor: x must be positive");
  // log Gamma(x+e) - log Gamma(x) = sum_{j>=1} psi^{(j-1)}(x) e^j / j!
  std::vector<double> l(static_cast<std::size_t>(n + 1), 0.0);
  double fact = 1.0;
  for (int j = 1; j <= n; ++j) {
    fact *= j;
    l[static_cast<std::size_t>(j)] = boost::math::polygamma(j - 1, x) / fact;
  }
  // exp of a power series: c' = l' c.
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c[0] = std::tgamma(x);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * l[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = s / k;
  }
  return c;
}

double gamma_derivative(int k, double x) {
  if (k < 0) throw std::invalid_argument("gamma_derivative: negative order");
  const auto c = gamma_taylor(x, k);
  return c[static_cast<std::size_t>(k)] * std::tgamma(static_cast<double>(k) + 1.0);
}

namespace {

bool near_integer(cplx x) {
  return std::abs(x.imag()) < 1e-12 && std::abs(x.real() - std::round(x.real())) < 1e-8;
}

cplx series(cplx a, cplx b, cplx c, cplx z) {
  cplx rg = rgamma(c);
  cplx poch = 1.0;  // (a)_n (b)_n z^n / n!
  cplx sum = poch * rg;
  int small = 0;
  for (int n = 0; n < 5000; ++n) {
    poch *= (a + double(n)) * (b + double(n)) * z / double(n + 1);
    const cplx cn = c + double(n);
    rg = (std::abs(cn) > 1e-6) ? rg / cn : rgamma(cn + 1.0);
    const cplx term = poch * rg;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small >= 3) return sum;
    } else {
      small = 0;
    }
    if (poch == 0.0) return sum;
  }
  throw std::runtime_error("hyp2f1: series did not converge");
}

cplx continuation(cplx a, cplx b, cplx c, cplx z) {
  cplx z0 = 0.45 * z / std::abs(z);
  cplx w = series(a, b, c, z0);
  cplx dw = a * b * series(a + 1.0, b + 1.0, c + 1.0, z0);
  const cplx ab = a * b;
  for (int step = 0; step < 10000; ++step) {
    const cplx rest = z - z0;
    if (std::abs(rest) < 1e-15 * std::max(1.0, std::abs(z))) return w;
    const double radius = std::min(std::abs(z0), std::abs(1.0 - z0));
    const double len = std::min(std::abs(rest), 0.5 * radius);
    const cplx h = rest / std::abs(rest) * len;
    const cplx p0 = z0 * (1.0 - z0), p1 = 1.0 - 2.0 * z0;
    const cplx q0 = c - (a + b + 1.0) * z0, q1 = -(a + b + 1.0);
    // Taylor coefficients of w around z0 from the hypergeometric equation.
    cplx wn = w, wn1 = dw;
    cplx value = wn + wn1 * h, deriv = wn1;
    cplx hp = h;  // h^(n+1)
    int small = 0;
    for (int n = 0; n < 400; ++n) {
      const double dn = n;
      const cplx wn2 = -((p1 * (dn + 1.0) * dn + q0 * (dn + 1.0)) * wn1 + (-dn * (dn - 1.0) + q1 * dn - ab) * wn) /
                       (p0 * (dn + 2.0) * (dn + 1.0));
      deriv += (dn + 2.0) * wn2 * hp;
      hp *= h;
      const cplx term = wn2 * hp;
      value += term;
      wn = wn1;
      wn1 = wn2;
      if (std::abs(term) <= 1e-17 * std::abs(value)) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    w = value;
    dw = deriv;
    z0 += h;
  }
  throw std::runtime_error("hyp2f1: continuation did not reach the target");
}

}  // namespace

cplx hyp2f1_regularized(cplx a, cplx b, cplx c, cplx z) {
  if (z.imag() == 0.0 && z.real() > 1.0) throw std::domain_error("hyp2f1: z on the branch cut");
  if (std::abs(z) <= 0.5) return series(a, b, c, z);
  const cplx pf = z / (z - 1.0);
  if (std::abs(pf) <= 0.5) return std::pow(1.0 - z, -a) * series(a, c - b, c, pf);
  if (std::abs(z) >= 2.0 && !near_integer(b - a)) {
    const cplx mz = -z, iz = 1.0 / z;
    const cplx t1 = kPi / std::sin(kPi * (b - a)) * rgamma(b) * rgamma(c - a) * std::pow(mz, -a) *
                    series(a, a - c + 1.0, a - b + 1.0, iz);
    const cplx t2 = kPi / std::sin(kPi * (a - b)) * rgamma(a) * rgamma(c - b) * std::pow(mz, -b) *
                    series(b, b - c + 1.0, b - a + 1.0, iz);
    return t1 + t2;
  }
  const cplx s = c - a - b;
  if (std::abs(1.0 - z) <= 0.5 && !near_integer(s)) {
    const cplx omz = 1.0 - z;
    const cplx t1 = kPi / std::sin(kPi * s) * rgamma(c - a) * rgamma(c - b) * series(a, b, 1.0 - s, omz);
    const cplx t2 = kPi / std::sin(-kPi * s) * rgamma(a) * rgamma(b) * std::pow(omz, s) * series(c - a, c - b, s + 1.0, omz);
    return t1 + t2;
  }
  return continuation(a, b, c, z);
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
  if (is_nonpositive_integer(c)) throw std::domain_error("hyp2f1: c is a non-positive integer");
  return gamma(c) * hyp2f1_regularized(a, b, c, z);
}

}  // namespace mpr
