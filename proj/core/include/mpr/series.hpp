#pragma once

#include "mpr/feynman.hpp"
#include "mpr/special.hpp"

#include <string>
#include <vector>

namespace mpr {

/// Truncated power series with complex coefficients and a per-coefficient
/// standard error. Errors propagate to first order, treating coefficients as
/// independent, and include a floating-point rounding term.
class CouplingSeries {
 public:
  enum class Variable { minus_g, t, inverse_s };

  CouplingSeries(Variable v, int order);
  static CouplingSeries monomial(Variable v, int order, int power, cplx coeff = 1.0);

  Variable variable() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  cplx coeff(int n) const { return n >= 0 && n <= order() ? c_[static_cast<std::size_t>(n)] : cplx(0.0); }
  double error(int n) const { return n >= 0 && n <= order() ? e_[static_cast<std::size_t>(n)] : 0.0; }
  void set(int n, cplx value, double error = 0.0);

  CouplingSeries operator+(const CouplingSeries& o) const;
  CouplingSeries operator-(const CouplingSeries& o) const;
  CouplingSeries operator*(const CouplingSeries& o) const;
  CouplingSeries operator*(cplx s) const;
  /// Multiply by x^k (k may be negative when the low coefficients vanish).
  CouplingSeries shifted(int k) const;
  CouplingSeries reciprocal() const;
  CouplingSeries truncated(int order) const;

  static std::string variable_name(Variable v);

 private:
  void check(const CouplingSeries& o) const;
  Variable var_;
  std::vector<cplx> c_;
  std::vector<double> e_;
};

/// Taylor coefficients in t of 1/Gamma(r - i t / 2 pi), from the power series
/// of 1/Gamma(z) at z = 0 (Euler-Mascheroni and zeta-value recursion)
/// shifted by the functional equation.
class ReciprocalGammaExpansion {
 public:
  ReciprocalGammaExpansion(int r, int order);
  int r() const { return r_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^p in 1/Gamma(r - i t / 2 pi); coefficient(0) = 1/Gamma(r).
  cplx coefficient(int p) const { return c_[static_cast<std::size_t>(p)]; }
  /// Coefficient of t^p in t^(r-1)/Gamma(r - i t / 2 pi).
  cplx shifted(int p) const { return p >= r_ - 1 ? coefficient(p - r_ + 1) : cplx(0.0); }
  CouplingSeries as_series() const;

 private:
  int r_;
  std::vector<cplx> c_;
};

/// Coefficients a_k of 1/Gamma(z) = sum_{k>=1} a_k z^k, k = 0..n (a_0 = 0).
std::vector<double> reciprocal_gamma_coefficients(int n);

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Feynman-integral coefficients per perturbative order r.
struct OrderCoefficients {
  int r = 0;
  /// m^1 coefficient of the pair-point function at order r, two ways.
  Estimate gamma0_r1, gamma0_r1_alt;
  /// m^0 coefficient of the closable two-point part, from the amputated
  /// graphs G\e and independently from the opened subdivisions with legs.
  Estimate gC_r0, gC_r0_alt;
};

struct CoefficientTable {
  int order = 0;
  std::vector<OrderCoefficients> rows;  // r = 0..order
  long long samples = 0;
  std::uint64_t seed = 0;
};

/// Evaluate all coefficients up to order M (M <= 6) with Monte Carlo
/// integrals drawn from the cache.
CoefficientTable compute_coefficients(int order, IntegralCache& cache, IntegralCache& leg_cache);

/// Coefficients as streams in powers of (-g).
CouplingSeries gamma0_series(const CoefficientTable& t);
CouplingSeries gC_series(const CoefficientTable& t);
/// m^0 part of the unclosable self-energy:
/// 2 sum_r Gamma_{r,1} (r-1) (-g)^{r+1} / (1 + g / 2 pi).
CouplingSeries sigmaU_m0(const CoefficientTable& t);
/// 1 + gC + sigmaU, the two-point series.
CouplingSeries g2_series(const CoefficientTable& t);
/// Reciprocal of the two-point series: the zeta^[2] stream.
CouplingSeries gamma2_series(const CoefficientTable& t);

/// Taylor series in t of the characteristic function of nu_0 (which = 0) or
/// nu_2 (which = 2) to order M.
CouplingSeries phi_series(int which, const CoefficientTable& t, int order);

/// E(nu^j) = j! [t^j] Phi / i^j for j = 0..order.
std::vector<cplx> moments_from_series(const CouplingSeries& phi);
std::vector<double> moment_errors_from_series(const CouplingSeries& phi);

}  // namespace mpr
