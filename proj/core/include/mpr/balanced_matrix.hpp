#pragma once

#include "mpr/exact.hpp"

#include <compare>
#include <string>
#include <vector>

namespace mpr {

/// Point-of-contact matrix of a directed multigraph with r inner and p outer
/// vertices. Entry (i,j) counts edges i -> j. The diagonal is zero and every
/// row sum equals the matching column sum (the vertex degree, "dias").
/// Indices are 0-based; inner vertices come first.
class BalancedMatrix {
 public:
  BalancedMatrix() = default;
  BalancedMatrix(int r, int p, std::vector<int> entries);
  static BalancedMatrix from_rows(const std::vector<std::vector<int>>& rows, int p = 0);

  int q() const { return r_ + p_; }
  int r() const { return r_; }
  int p() const { return p_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * q() + j)]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> rows() const;

  int dia(int k) const;
  std::vector<int> dias() const;
  /// Sum of the inner degrees.
  int sum() const;
  /// Total number of edges.
  int edge_count() const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const BalancedMatrix&, const BalancedMatrix&) = default;
  friend std::strong_ordering operator<=>(const BalancedMatrix& a, const BalancedMatrix& b);

 private:
  int r_ = 0;
  int p_ = 0;
  std::vector<int> entries_;
};

/// Determinant of Diag(dias) - F with the first row and column deleted.
BigInt cofactor(const BalancedMatrix& f);

/// Membership in MF(r,p,w): inner degrees >= w, outer degrees exactly 1,
/// nonzero cofactor.
bool in_mf(const BalancedMatrix& f, int w);

/// All matrices of MF(r,p,w) whose inner degrees are at most cap, in
/// row-major lexicographic order of the entries.
std::vector<BalancedMatrix> enumerate_mf(int r, int p, int w, int cap);

/// H_r(2,...,2): the phi^4 vacuum matrices.
std::vector<BalancedMatrix> enumerate_phi4(int r);

/// Every balanced q x q matrix (p = 0) with at most max_edges edges,
/// connected or not, including the zero matrix.
std::vector<BalancedMatrix> enumerate_balanced(int q, int max_edges);

/// Remove rows and columns of vertices with zero degree.
BalancedMatrix komp(const BalancedMatrix& f);

/// Number of Euler circuits of the multigraph with labelled edges:
/// prod (dias_k - 1)! times cof(Diag - komp(F)). Zero when the edge set is
/// disconnected or empty.
BigInt eul(const BalancedMatrix& f);
/// prod over inner k of dias_k!.
BigInt mud(const BalancedMatrix& f);
/// prod over all entries F_ij!.
BigInt mult(const BalancedMatrix& f);

/// F^sigma with F^sigma_ij = F_{sigma(i), sigma(j)}.
BalancedMatrix permute(const BalancedMatrix& f, const std::vector<int>& sigma);
/// All sigma in S_q that map inner vertices to inner vertices.
std::vector<std::vector<int>> block_permutations(int r, int p);
/// Number of sigma in S_r(p) with F^sigma = F.
long syf(const BalancedMatrix& f);
/// r! p! / Syf(F), the size of the orbit of F.
BigInt gr(const BalancedMatrix& f);
/// Lexicographically smallest F^sigma over S_r(p).
BalancedMatrix canonical(const BalancedMatrix& f);

/// Split edge (i,j) of a vacuum matrix by a new outer vertex q: one edge i->q,
/// one edge q->j, and F_ij decreased by one.
BalancedMatrix div(const BalancedMatrix& f, int i, int j);
/// For p = 1: the inner vertex feeding the outer vertex.
int bnke(const BalancedMatrix& f);
/// For p = 1: the inner vertex fed by the outer vertex.
int anke(const BalancedMatrix& f);
bool closable(const BalancedMatrix& f);
/// Remove the outer vertex and join its two edges into one.
BalancedMatrix cl(const BalancedMatrix& f);

}  // namespace mpr
