#pragma once

#include "mpr/balanced_matrix.hpp"
#include "mpr/exact.hpp"

#include <vector>

namespace mpr {

/// wei_F(m,p) = sum_j a[j] m^(j-p). Index j is the number of cycles.
struct WeightPolynomial {
  int p = 0;
  std::vector<Rational> a;

  /// Coefficient of m^power (zero outside the stored range).
  Rational coefficient_of_m(int power) const;
  /// Value at a numeric m.
  double evaluate(double m) const;
  /// Number of permutations counted (wei at m = 1).
  Rational total() const;

  friend bool operator==(const WeightPolynomial& x, const WeightPolynomial& y);
};

/// Block map of the slots 0..R+p-1: slot k belongs to vertex qa[k]. Inner
/// vertex u owns dias_u consecutive slots; each outer vertex owns one.
std::vector<int> slot_blocks(const BalancedMatrix& f);

/// Adj(sigma)_ij = #{k in block i : block of sigma(k) is j}.
std::vector<int> slot_adjacency(const std::vector<int>& sigma, const std::vector<int>& blocks, int q);

bool is_loopfree(const std::vector<int>& sigma, const std::vector<int>& blocks);

int cycle_count(const std::vector<int>& sigma);

/// Sum over all sigma in S_{R+p} with Adj(sigma) = F of m^(cycn(sigma) - p).
/// Requires Sum(F) + p <= 9.
WeightPolynomial wei_bruteforce(const BalancedMatrix& f);

/// The same polynomial from the partition formula: a sum over multisets of
/// connected balanced summands of Mud(F) prod Eul/Mult divided by the
/// multiset symmetry factor.
WeightPolynomial wei_partition(const BalancedMatrix& f);

/// 2^r cof(Diag - F) / prod F_ij! for a phi^4 vacuum matrix.
Rational a1_closed(const BalancedMatrix& f);

}  // namespace mpr
