#pragma once

#include "mpr/series.hpp"
#include "mpr/special.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mpr {

/// z(g) = -1/4 + i/g - i Log(g) / 2 pi with the principal logarithm.
cplx z_of_g(cplx g);
/// rho(g) = z'(g) = -(i/g^2)(1 + g/2 pi).
cplx rho_of_g(cplx g);
/// mu(s) = 1 + i/(2 pi s).
cplx mu_of_s(cplx s);
/// theta_k(g,b) = exp(-b (k + z(g) + i ln(b)/2 pi)).
cplx theta_kernel(int k, cplx g, double b);
/// h(t,s) = exp(-t s - (i t / 2 pi) Log(t s)).
cplx h_kernel(double t, cplx s);

/// g lies in R_k when Re z(g) + k > 0.
bool in_region(int k, cplx g);
/// Re(s) - arg(s)/2 pi, the quantity that controls convergence in s.
double s_margin(cplx s);

struct TransformValue {
  cplx value;
  double error = 0.0;
  long evaluations = 0;
};

/// P_mu(s) = int_0^inf t^mu h(t,s) dt by adaptive quadrature.
TransformValue P_mu(double mu, cplx s);

/// Coefficients of gamma_p(y) as a polynomial in y (index = power of y).
/// The p-th term of the expansion integrates t^(mu+p) e^{-ts} Log(ts)^p / p!,
/// which rotates onto Gamma^{(p)}(mu+p+1)/p!, so the polynomial is constant.
std::vector<double> gamma_p_coeffs(double mu, int p);
/// The double sum over r, m of (-1)^m y^{p-r+m} Gamma^{(r-m)}(x_r) /
/// ((p-r)! m! (r-m)!). With x_r = mu+p+1 it collapses to gamma_p_coeffs;
/// with x_r = mu+r+1 it does not once p >= 1 and mu > 0.
std::vector<double> gamma_p_double_sum(double mu, int p, bool argument_from_r);
cplx evaluate_in_log(const std::vector<double>& poly, cplx s);

/// s^{-mu-1} sum_{p<=q} (2 pi i s)^{-p} gamma_p(Log s).
cplx P_mu_asymptotic(double mu, cplx s, int q);

struct SlopeFit {
  double slope = 0.0;
  double expected = 0.0;
  std::vector<double> abs_s, abs_error;
};
/// Least-squares slope of log|P_mu - S_{mu,q}| against log|s|.
SlopeFit truncation_slope(double mu, int q, const std::vector<cplx>& s_values);

/// (-1/mu(s) d/ds)^p applied to 1/(s^R mu(s)), in closed form.
cplx borel_rhs(cplx s, int R, int p = 0);
/// The same derivative ladder by Richardson-extrapolated central differences.
cplx borel_rhs_numeric(cplx s, int R, int p, double h = 1e-2);
/// int_0^inf exp(-b(s + (i/2 pi) Log(s b))) b^{R+p-1} / Gamma(R - i b / 2 pi) db.
TransformValue borel_lhs(cplx s, int R, int p = 0);

struct BorelCheck {
  cplx s;
  int R = 1, p = 0;
  cplx lhs, rhs;
  double rel_diff = 0.0;
  bool pass = false;
};
BorelCheck borel_identity(cplx s, int R, int p = 0, double tol = 1e-6);

/// Phi_0 or Phi_2 from the coefficient table, truncated at order M, as a
/// function of real t.
class TruncatedPhi {
 public:
  TruncatedPhi(int which, const CoefficientTable& t, int order);
  int which() const { return which_; }
  int order() const { return order_; }
  cplx operator()(double t) const;
  /// Phi without the exponential prefactor, i.e. the Gamma-basis sum.
  cplx bracket(double t) const;

  /// One Gamma-basis term: coeff * t^power / Gamma(R - i t / 2 pi).
  struct Term {
    cplx coeff;
    int power = 0;
    int R = 1;
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  int which_, order_;
  std::vector<Term> terms_;
};

using PhiFunction = std::function<cplx(double)>;

/// L_0 (which = 0) or L_2 (which = 2) at (k, g) by quadrature of a callable Phi.
TransformValue L_transform_numeric(int which, int k, cplx g, const PhiFunction& phi);
/// The same transform of a truncated Phi, term by term from the closed
/// Borel forms. Needs k = 0 and 0 < arg g < pi so that s = i/g bridges.
cplx L_transform_termwise(const TruncatedPhi& phi, cplx g);

/// Asymptotic series in u = 1/s helpers.
/// d/ds maps u^n to -n u^{n+1}; the result has one more order.
CouplingSeries derivative_in_s(const CouplingSeries& f);
/// Termwise antiderivative in s with zero integration constant: u^n maps
/// to u^{n-1}/(1-n). A u^1 term would integrate to a logarithm; its
/// coefficient is returned in log_residual and dropped.
CouplingSeries antiderivative_in_s(const CouplingSeries& f, cplx* log_residual = nullptr);

/// Asymptotic expansion of L_0 / L_2 in u = 1/s at k = 0, from the Taylor
/// coefficients of Phi and the P_k expansions.
CouplingSeries L_asymptotic(int which, const CoefficientTable& t, int order);

struct ZetaClosure {
  CouplingSeries zeta;  // in powers of (-g)
  std::vector<cplx> log_residuals;
};
/// zeta^[0] (which = 0) or zeta^[2] (which = 2) to order M from the
/// asymptotic L-series, with the integration constants fixed by
/// eta_0 = O(1/s^2) and eta_2 = 1 + O(1/s).
ZetaClosure zeta_closure(int which, const CoefficientTable& t, int order);

}  // namespace mpr
