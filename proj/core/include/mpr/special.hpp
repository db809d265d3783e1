#pragma once

#include <complex>
#include <vector>

namespace mpr {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// log Gamma(z) on the branch obtained from Stirling's series plus
/// recurrence and reflection. Only exp(log_gamma) is branch independent.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
/// 1/Gamma(z), entire; exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

/// Gamma^{(k)}(x) for real x > 0, from the Taylor series of log Gamma with
/// polygamma coefficients.
double gamma_derivative(int k, double x);

/// Taylor coefficients c_0..c_n of Gamma(x + e) in e.
std::vector<double> gamma_taylor(double x, int n);

/// Gauss hypergeometric 2F1(a,b;c;z) divided by Gamma(c). This is entire in
/// c, so it stays finite when c is a non-positive integer. Uses the power
/// series for |z| <= 1/2, the Pfaff, 1/z and 1-z transformations where they
/// land inside that disc, and analytic continuation of the hypergeometric
/// equation by Taylor steps elsewhere. z on the cut (1, inf) is rejected.
cplx hyp2f1_regularized(cplx a, cplx b, cplx c, cplx z);
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

}  // namespace mpr
