#pragma once

#include <complex>
#include <functional>

namespace mpr {

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;
  long evaluations = 0;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Adaptive 15-point Gauss-Kronrod on [a, b] with bisection of the worst
/// panel until the summed error estimate meets max(abs_tol, rel_tol*|I|).
QuadratureResult integrate(const ComplexIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                           int max_panels = 4000);

/// Integral over [0, inf): geometric panels [0,h], [h,2h], [2h,4h], ... each
/// integrated adaptively, stopping once three consecutive panels contribute
/// less than tail_tol relative to the running total.
QuadratureResult integrate_half_line(const ComplexIntegrand& f, double h, double rel_tol, double tail_tol = 1e-12);

}  // namespace mpr
