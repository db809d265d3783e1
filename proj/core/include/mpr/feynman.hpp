#pragma once

#include "mpr/balanced_matrix.hpp"
#include "mpr/multigraph.hpp"
#include "mpr/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mpr {

/// First Symanzik polynomial: sum over spanning trees T of the product of
/// alpha_e over edges not in T. Variable k is edge k; directions are ignored.
Polynomial symanzik(const DirectedMultigraph& g);

/// Loop number #E - #V + 1 of a connected graph.
int loop_number(const DirectedMultigraph& g);

/// One sector of the iterated decomposition of the projective integrand
///   Gamma(#V-1) * 1 / (P(x) * (sum x)^(#V-1))
/// over a unit cube. In the sector the integrand is
///   prod t_i^prefactor_i / (poly(t) * (sum_j prod_i t_i^x_map[j][i])^(#V-1)),
/// with poly(0) > 0 and all prefactor exponents >= 0, so it is bounded.
struct Sector {
  int dims = 0;
  std::vector<Exponents> x_map;
  Exponents prefactor{};
  Polynomial poly;
};

/// Decomposition of the Gamma_G(0) integrand into sectors with bounded
/// integrands. Throws if some sector has a non-integrable singularity.
class SectorIntegrand {
 public:
  explicit SectorIntegrand(const DirectedMultigraph& g);

  std::size_t sector_count() const { return sectors_.size(); }
  int dims() const { return dims_; }
  /// Gamma(#V - 1).
  double prefactor() const { return prefactor_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  /// Integrand of sector s at t in [0,1]^dims (without the prefactor).
  double evaluate(std::size_t s, const double* t) const;

 private:
  struct Compiled {
    std::vector<double> coeff;
    std::vector<std::uint32_t> start;
    std::vector<std::uint8_t> var, exp;
    std::vector<std::uint32_t> map_start;
    std::vector<std::uint8_t> map_var, map_exp;
    std::vector<std::uint8_t> pre_var, pre_exp;
    std::array<int, kMaxVariables> max_exp{};
  };
  std::vector<Sector> sectors_;
  std::vector<Compiled> compiled_;
  int dims_ = 0;
  int power_ = 0;
  double prefactor_ = 1.0;
};

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long long n_eval = 0;
  std::size_t sectors = 0;

  double rel_stderr() const { return value != 0.0 ? std_error / std::abs(value) : 0.0; }
};

/// Gamma_G(0) = int e^{-sum alpha} / P_G(alpha) d alpha by stratified Monte
/// Carlo: each sector is a stratum and samples are allocated by a Neyman
/// rule after a pilot pass.
IntegralEstimate gamma_at_zero(const DirectedMultigraph& g, long long samples, std::uint64_t seed);

/// The same integral by a tensor Gauss-Legendre rule with n points per axis
/// on every sector. The error estimate is the difference to the n-1 point
/// rule.
IntegralEstimate gamma_at_zero_cubature(const DirectedMultigraph& g, int points);

/// 64-bit seed derived from a base seed and a text label.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& label);

/// Memo of Gamma_G(0) by undirected isomorphism class. Each class gets its
/// own seed derived from the base seed and the class key, so results do not
/// depend on evaluation order.
class IntegralCache {
 public:
  IntegralCache(long long samples, std::uint64_t seed) : samples_(samples), seed_(seed) {}
  IntegralEstimate get(const DirectedMultigraph& g);
  const std::map<std::string, IntegralEstimate>& entries() const { return memo_; }
  long long samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }

 private:
  long long samples_;
  std::uint64_t seed_;
  std::map<std::string, IntegralEstimate> memo_;
};

/// A sum of integrals that may share isomorphism classes. The variance
/// treats equal classes as fully correlated.
struct CorrelatedSum {
  double value = 0.0;
  double std_error = 0.0;
  double max_rel_stderr = 0.0;
};
CorrelatedSum sum_over_graphs(const std::vector<DirectedMultigraph>& graphs, IntegralCache& cache);

struct DivSumResult {
  double lhs = 0.0, lhs_err = 0.0;
  double rhs = 0.0, rhs_err = 0.0;
  double max_rel_stderr = 0.0;
  /// |lhs - rhs| in units of the combined standard error.
  double z = 0.0;
};

/// Sum over edges e of Gamma_{Div(e,G)}(0) against (#E - L) Gamma_G(0), for
/// the vacuum graph of F.
DivSumResult div_sum_check(const BalancedMatrix& f, IntegralCache& cache);

}  // namespace mpr
