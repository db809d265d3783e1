#pragma once

#include "mpr/special.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mpr {

/// Gagliardo-Nirenberg / Lipatov constants for the planar theory. Only I4
/// has a built-in default (back-solved from 1/(2 pi A) = 0.933112776025);
/// the others must be supplied before anything that needs them is used.
struct LipatovConstants {
  std::optional<double> I1, I4, I6, DL, DT;
  std::string provenance;

  static LipatovConstants defaults();
  /// Throws std::invalid_argument naming the first missing or non-positive
  /// constant among those listed.
  void require(const std::string& names) const;
  /// A = 4/I4.
  double A() const;
  /// 1/(2 pi A) = I4/(8 pi).
  double inverse_two_pi_A() const;
  double mu0() const;
  double mu2() const;
  /// xi_0(N=0, d=2) and xi_2(N=0, d=2).
  double xi0() const;
  double xi2() const;
};

inline constexpr double kReferenceInverseTwoPiA = 0.933112776025;

/// xi_M(N, d) = 2^{N-1} (2 pi)^{-(N+d+1)/2} ((I6-I4)/d)^{d/2}
///              (4/I4)^{(M+d)/2} DL^{-1/2} DT^{-(N-1)/2}.
double xi_M(int M, double N, double d, const LipatovConstants& c);

/// Phi^as_0 and Phi^as_2: the Lipatov-summed characteristic functions.
/// t may be complex; the closed forms are analytic inside |t| < 1/A.
cplx phi_as(int which, cplx t, const LipatovConstants& c);
/// The same with the xi prefactor set to one, so only A enters.
cplx phi_as_shape(int which, cplx t, double A);

/// Gamma-shaped rising-edge densities f_0, f_2 for x < 0.
double edge_density(int which, double x, const LipatovConstants& c);
/// log f(x) - x/A - (mu - 1) ln(-x/A); constant in x by construction.
double edge_log_shape_residual(int which, double x, const LipatovConstants& c);

/// Taylor coefficients c_0..c_n of phi_as_shape around t = 0 by the
/// trapezoidal rule on the circle |t| = radius.
std::vector<cplx> phi_as_taylor(int which, double A, int n, double radius, int points = 512);

/// Coefficients B_n of the Gamma-basis expansion
///   Phi^as e^{-i shift t / 2 pi} = sum_n B_n (-i t)^n / Gamma(n + R0 - i t / 2 pi)
/// (R0 = 0 for which = 0, R0 = 2 for which = 2), recovered from the Taylor
/// coefficients of the closed form by a triangular solve. For which = 0 the
/// n = 0 and n = 1 basis functions coincide up to a constant, so B_1 absorbs
/// both and B_0 is reported as zero.
std::vector<cplx> gamma_basis_coefficients(int which, double A, int n);

struct RatioCheck {
  std::vector<int> r;
  std::vector<double> observed, predicted, rel_diff;
  bool pass = false;
};
/// Consecutive ratios |B_{r+1}/B_r| of the Gamma-basis coefficients of
/// Phi^as against the Lipatov growth of the order-r coefficients:
/// 4 pi (r-1) Gamma_{r,1} with Gamma_{r,1} ~ Gamma(r+1/2) A^r for which = 0,
/// (r+1) Gamma(r+3/2) A^r for which = 2.
RatioCheck lipatov_ratio_check(int which, double A, int r_from, int r_to, double tol = 0.1);

/// |c_{r+1}/c_r| for the Taylor coefficients of a Phi series, a trend
/// indicator for the radius of convergence 1/A.
std::vector<double> taylor_ratio_trend(const std::vector<cplx>& c);

struct SingularityCheck {
  cplx limit;     // extrapolated Phi^as (1 + i A t)^mu at t -> i/A
  cplx expected;  // A * C * Gamma(mu) from the Gamma density f = C (-x/A)^{mu-1} e^{x/A}
  double rel_diff = 0.0;
};
/// The Fourier transform of the Gamma-shaped edge has a (1 + iAt)^{-mu}
/// singularity at t = i/A with residue-like weight A C Gamma(mu). This
/// compares that weight with the behaviour of the closed form Phi^as.
SingularityCheck singularity_check(int which, const LipatovConstants& c);

}  // namespace mpr
