#include "mpr/balanced_matrix.hpp"
#include "mpr/multigraph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using namespace mpr;

namespace {

BalancedMatrix M(std::vector<std::vector<int>> rows, int p = 0) { return BalancedMatrix::from_rows(rows, p); }

// Fraction-free determinant over long long; fine for the small Laplacians here.
long long det_ll(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

long long laplacian_cofactor(const BalancedMatrix& f) {
  const int q = f.q();
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(q - 1), std::vector<long long>(static_cast<std::size_t>(q - 1)));
  for (int i = 1; i < q; ++i)
    for (int j = 1; j < q; ++j) a[i - 1][j - 1] = (i == j ? f.dia(i) : 0) - f(i, j);
  return det_ll(a);
}

bool dfs_connected(const BalancedMatrix& f) {
  const int q = f.q();
  int start = -1;
  for (int i = 0; i < q; ++i)
    if (f.dia(i) > 0) start = i;
  if (start < 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  std::function<void(int)> go = [&](int v) {
    seen[static_cast<std::size_t>(v)] = true;
    for (int u = 0; u < q; ++u)
      if ((f(v, u) > 0 || f(u, v) > 0) && !seen[static_cast<std::size_t>(u)]) go(u);
  };
  go(start);
  for (int i = 0; i < q; ++i)
    if (f.dia(i) > 0 && !seen[static_cast<std::size_t>(i)]) return false;
  return true;
}

long long factorial_ll(int n) { return n <= 1 ? 1 : n * factorial_ll(n - 1); }

}  // namespace

TEST(GraphOfMatrix, BananaHasFourEdges) {
  const auto g = DirectedMultigraph::from_matrix(M({{0, 2}, {2, 0}}));
  EXPECT_EQ(g.vertex_count, 2);
  EXPECT_EQ(g.edges.size(), 4u);
  EXPECT_EQ(std::count(g.edges.begin(), g.edges.end(), std::pair{0, 1}), 2);
  EXPECT_EQ(std::count(g.edges.begin(), g.edges.end(), std::pair{1, 0}), 2);
}

TEST(GraphOfMatrix, ThreeCycle) {
  const auto g = DirectedMultigraph::from_matrix(M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_EQ(g.edges, expected);
}

TEST(GraphOfMatrix, AdjacencyRoundtrip) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2)) EXPECT_EQ(DirectedMultigraph::from_matrix(f).to_matrix(), f);
  for (const auto& f : enumerate_mf(3, 1, 2, 2)) EXPECT_EQ(DirectedMultigraph::from_matrix(f).to_matrix(), f);
}

TEST(Euler, Examples) {
  EXPECT_EQ(eul(M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})), 1);
  EXPECT_EQ(eul(M({{0, 2}, {2, 0}})), 2);
  EXPECT_EQ(eul(M({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})), 0);
}

TEST(Euler, MatchesTrailEnumeration) {
  for (int q = 1; q <= 4; ++q)
    for (const auto& f : enumerate_balanced(q, 5))
      EXPECT_EQ(eul(f), BigInt(count_euler_circuits(DirectedMultigraph::from_matrix(f)))) << f.to_string();
}

TEST(Euler, PositiveExactlyWhenConnected) {
  for (int q = 2; q <= 5; ++q)
    for (const auto& f : enumerate_balanced(q, 6)) {
      if (f.is_zero()) continue;
      EXPECT_EQ(eul(f) > 0, dfs_connected(f)) << f.to_string();
    }
}

TEST(EnumerateMF, SmallCases) {
  const auto two = enumerate_mf(2, 0, 2, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], M({{0, 2}, {2, 0}}));
  EXPECT_TRUE(enumerate_mf(1, 0, 2, 2).empty());
}

TEST(EnumerateMF, CountMatchesBruteForceScan) {
  for (int r = 3; r <= 4; ++r) {
    // Every zero-diagonal r x r matrix with entries in {0,1,2}, row and column
    // sums 2 and a nonzero Laplacian cofactor.
    const int cells = r * r;
    std::vector<int> e(static_cast<std::size_t>(cells), 0);
    long count = 0;
    for (;;) {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i) {
        int rs = 0, cs = 0;
        for (int j = 0; j < r; ++j) {
          rs += e[static_cast<std::size_t>(i * r + j)];
          cs += e[static_cast<std::size_t>(j * r + i)];
        }
        ok = e[static_cast<std::size_t>(i * r + i)] == 0 && rs == 2 && cs == 2;
      }
      if (ok && laplacian_cofactor(BalancedMatrix(r, 0, e)) != 0) ++count;
      int k = 0;
      while (k < cells && ++e[static_cast<std::size_t>(k)] > 2) e[static_cast<std::size_t>(k++)] = 0;
      if (k == cells) break;
    }
    EXPECT_EQ(static_cast<long>(enumerate_mf(r, 0, 2, 2).size()), count) << "r=" << r;
  }
}

TEST(EnumerateMF, MembershipInvariantsAndOrder) {
  for (int r = 1; r <= 4; ++r)
    for (int p = 0; p <= 1; ++p) {
      const auto list = enumerate_mf(r, p, 2, 3);
      for (std::size_t k = 0; k < list.size(); ++k) {
        const auto& f = list[k];
        for (int i = 0; i < f.q(); ++i) {
          EXPECT_EQ(f(i, i), 0);
          int rs = 0, cs = 0;
          for (int j = 0; j < f.q(); ++j) {
            rs += f(i, j);
            cs += f(j, i);
          }
          EXPECT_EQ(rs, cs);
          if (i < r) {
            EXPECT_GE(rs, 2);
            EXPECT_LE(rs, 3);
          } else {
            EXPECT_EQ(rs, 1);
          }
        }
        EXPECT_NE(cofactor(f), 0);
        EXPECT_TRUE(in_mf(f, 2));
        if (k > 0) EXPECT_TRUE(list[k - 1].entries() < f.entries());
      }
    }
}

TEST(Symmetry, Examples) {
  const auto banana = M({{0, 2}, {2, 0}});
  EXPECT_EQ(syf(banana), 2);
  EXPECT_EQ(gr(banana), 1);
  const auto one = M({{0, 1}, {1, 0}}, 1);
  EXPECT_EQ(syf(one), 1);
  EXPECT_EQ(gr(one), 1);
}

TEST(Symmetry, LagrangeAndBruteForceStabilizer) {
  for (int r = 3; r <= 4; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2)) {
      std::vector<int> sigma(static_cast<std::size_t>(r));
      std::iota(sigma.begin(), sigma.end(), 0);
      long fixed = 0;
      do {
        bool same = true;
        for (int i = 0; i < r && same; ++i)
          for (int j = 0; j < r && same; ++j) same = f(sigma[std::size_t(i)], sigma[std::size_t(j)]) == f(i, j);
        fixed += same;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      EXPECT_EQ(syf(f), fixed);
      EXPECT_EQ(gr(f) * syf(f), factorial_ll(r));
    }
}

TEST(Canonical, InvariantUnderRelabeling) {
  for (const auto& f : enumerate_mf(4, 0, 2, 2)) {
    const auto c = canonical(f);
    for (const auto& s : block_permutations(4, 0)) EXPECT_EQ(canonical(permute(f, s)), c);
  }
  for (const auto& f : enumerate_mf(3, 1, 2, 2))
    for (const auto& s : block_permutations(3, 1)) EXPECT_EQ(canonical(permute(f, s)), canonical(f));
}

TEST(DivCl, Example) {
  const auto h = div(M({{0, 2}, {2, 0}}), 0, 1);
  EXPECT_EQ(h, M({{0, 1, 1}, {2, 0, 0}, {0, 1, 0}}, 1));
  EXPECT_TRUE(closable(h));
  EXPECT_EQ(bnke(h), 0);
  EXPECT_EQ(anke(h), 1);
  const auto h21 = div(M({{0, 2}, {2, 0}}), 1, 0);
  EXPECT_EQ(bnke(h21), 1);
  EXPECT_EQ(anke(h21), 0);
}

TEST(DivCl, RoundtripsForAllEdges) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2))
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (f(i, j) == 0) continue;
          const auto h = div(f, i, j);
          EXPECT_TRUE(in_mf(h, 2));
          EXPECT_EQ(cl(h), f);
          EXPECT_EQ(div(cl(h), bnke(h), anke(h)), h);
        }
}

TEST(DivCl, DomainErrors) {
  EXPECT_ANY_THROW(div(M({{0, 2}, {2, 0}}), 0, 0));
  EXPECT_ANY_THROW(div(M({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), 0, 0));
  EXPECT_ANY_THROW(cl(M({{0, 2}, {2, 0}})));
}

TEST(Ladder, CaseARoundtrip) {
  for (int r = 2; r <= 3; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2))
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (f(i, j) == 0) continue;
          const auto core = DirectedMultigraph::from_matrix(div(f, i, j));
          for (int w = 1; w <= 2; ++w) {
            const auto g = ladder_attach_a(core, w);
            const auto d = ladder_decompose(g);
            EXPECT_EQ(d.kind, LadderCase::A);
            EXPECT_EQ(d.w, w);
            EXPECT_EQ(canonical_matrix(d.core), canonical_matrix(core));
          }
        }
}

TEST(Ladder, CaseBRoundtrip) {
  for (int r = 2; r <= 3; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2)) {
      const auto core = DirectedMultigraph::from_matrix(f);
      for (int v = 0; v < r; ++v)
        for (int w = 1; w <= 2; ++w) {
          const auto d = ladder_decompose(ladder_attach_b(core, w, v));
          EXPECT_EQ(d.kind, LadderCase::B);
          EXPECT_EQ(d.w, w);
          EXPECT_EQ(canonical_matrix(d.core), canonical_matrix(core));
          EXPECT_GT(d.core.in_degree(d.attach), 0);
        }
    }
}

TEST(Ladder, ClosableInputRejected) {
  const auto h = DirectedMultigraph::from_matrix(div(M({{0, 2}, {2, 0}}), 0, 1));
  EXPECT_THROW(ladder_decompose(h), std::invalid_argument);
}
