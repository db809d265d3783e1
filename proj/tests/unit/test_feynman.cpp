#include "mpr/balanced_matrix.hpp"
#include "mpr/feynman.hpp"
#include "mpr/multigraph.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace mpr;

namespace {

DirectedMultigraph graph(std::vector<std::vector<int>> rows) {
  return DirectedMultigraph::from_matrix(BalancedMatrix::from_rows(rows));
}

DirectedMultigraph edges(int vertices, std::vector<std::pair<int, int>> e) {
  DirectedMultigraph g;
  g.vertex_count = g.inner = vertices;
  g.edges = std::move(e);
  return g;
}

// Gamma_G(0) for n parallel edges between two vertices:
// 2^{n-1} int_0^inf y K_0(y)^n dy.
double melon_oracle(int n) {
  boost::math::quadrature::exp_sinh<double> q;
  const double v = q.integrate([n](double y) { return y * std::pow(boost::math::cyl_bessel_k(0, y), n); }, 1e-13);
  return std::ldexp(v, n - 1);
}

long long undirected_tree_count(const DirectedMultigraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<double>> lap(std::size_t(n), std::vector<double>(std::size_t(n), 0.0));
  for (const auto& [a, b] : g.edges) {
    lap[std::size_t(a)][std::size_t(a)] += 1;
    lap[std::size_t(b)][std::size_t(b)] += 1;
    lap[std::size_t(a)][std::size_t(b)] -= 1;
    lap[std::size_t(b)][std::size_t(a)] -= 1;
  }
  // Determinant of the reduced Laplacian by partial pivoting.
  const std::size_t m = std::size_t(n - 1);
  std::vector<std::vector<double>> a(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = lap[i + 1][j + 1];
  double det = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < m; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < m; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return std::llround(det);
}

int total_degree(const Monomial& mono, int vars) {
  int d = 0;
  for (int i = 0; i < vars; ++i) d += mono.e[std::size_t(i)];
  return d;
}

}  // namespace

TEST(Symanzik, Banana) {
  const auto g = graph({{0, 2}, {2, 0}});
  const auto p = symanzik(g);
  ASSERT_EQ(p.terms().size(), 4u);
  for (const auto& t : p.terms()) {
    EXPECT_EQ(t.c, 1);
    EXPECT_EQ(total_degree(t, 4), 3);
  }
  EXPECT_EQ(loop_number(g), 3);
}

TEST(Symanzik, ThreeCycle) {
  const auto g = graph({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const auto p = symanzik(g);
  EXPECT_EQ(p.terms().size(), 3u);
  for (const auto& t : p.terms()) EXPECT_EQ(total_degree(t, 3), 1);
  EXPECT_EQ(loop_number(g), 1);
}

TEST(Symanzik, MonomialCountIsTreeCountAndDegreeIsLoopNumber) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2)) {
      const auto g = DirectedMultigraph::from_matrix(f);
      const auto p = symanzik(g);
      EXPECT_EQ(static_cast<long long>(p.terms().size()), undirected_tree_count(g)) << f.to_string();
      const int L = loop_number(g);
      EXPECT_EQ(L, static_cast<int>(g.edges.size()) - g.vertex_count + 1);
      for (const auto& t : p.terms()) EXPECT_EQ(total_degree(t, static_cast<int>(g.edges.size())), L);
    }
}

TEST(Symanzik, PositiveInsideSimplex) {
  const auto g = DirectedMultigraph::from_matrix(enumerate_phi4(3).front());
  const auto p = symanzik(g);
  std::vector<double> x(g.edges.size(), 1e-9);
  EXPECT_GT(p.evaluate(x.data()), 0.0);
}

TEST(Symanzik, DisconnectedRejected) { EXPECT_ANY_THROW(symanzik(edges(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}))); }

TEST(GammaAtZero, TriangleIsOneHalf) {
  const auto g = graph({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const auto mc = gamma_at_zero(g, 200'000, 11);
  EXPECT_NEAR(mc.value, 0.5, 4 * mc.std_error + 1e-12);
  EXPECT_NEAR(gamma_at_zero_cubature(g, 12).value, 0.5, 1e-9);
}

TEST(GammaAtZero, BananaMatchesBesselIntegral) {
  const double oracle = melon_oracle(4);
  EXPECT_NEAR(oracle, 7.0 * boost::math::zeta(3.0), 1e-9);
  const auto g = graph({{0, 2}, {2, 0}});
  const auto mc = gamma_at_zero(g, 400'000, 5);
  EXPECT_NEAR(mc.value, oracle, 4 * mc.std_error);
  EXPECT_LT(mc.rel_stderr(), 5e-3);
  const auto cub = gamma_at_zero_cubature(g, 24);
  EXPECT_NEAR(cub.value, oracle, 1e-4 * oracle);
}

TEST(GammaAtZero, SunsetMatchesBesselIntegral) {
  const auto g = edges(2, {{0, 1}, {0, 1}, {1, 0}});
  const double oracle = melon_oracle(3);
  const auto mc = gamma_at_zero(g, 400'000, 9);
  EXPECT_NEAR(mc.value, oracle, 4 * mc.std_error);
  EXPECT_NEAR(gamma_at_zero_cubature(g, 24).value, oracle, 1e-4 * oracle);
}

TEST(GammaAtZero, MonteCarloAgreesWithCubatureAtOrderThree) {
  const auto g = DirectedMultigraph::from_matrix(enumerate_phi4(3).front());
  const auto mc = gamma_at_zero(g, 200'000, 3);
  const auto cub = gamma_at_zero_cubature(g, 7);
  EXPECT_NEAR(mc.value, cub.value, 4 * std::hypot(mc.std_error, cub.std_error));
}

TEST(GammaAtZero, DeterministicPerSeed) {
  const auto g = graph({{0, 2}, {2, 0}});
  const auto a = gamma_at_zero(g, 20'000, 42), b = gamma_at_zero(g, 20'000, 42), c = gamma_at_zero(g, 20'000, 43);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_NE(a.value, c.value);
}

TEST(GammaAtZero, PendantLegsFactorOut) {
  for (int r = 2; r <= 3; ++r) {
    const auto g = DirectedMultigraph::from_matrix(enumerate_phi4(r).front());
    for (int e = 0; e < static_cast<int>(g.edges.size()); e += 2) {
      const auto legs = gamma_at_zero(open_outer_vertices(subdivide_edge(g, e)), 200'000, derive_seed(1, "legs"));
      const auto cut = gamma_at_zero(delete_edge(g, e), 200'000, derive_seed(1, "cut"));
      EXPECT_NEAR(legs.value, cut.value, 4 * std::hypot(legs.std_error, cut.std_error)) << "r=" << r << " e=" << e;
    }
  }
}

TEST(DivSum, BananaPrefactorAndSumRule) {
  const auto f = BalancedMatrix::from_rows({{0, 2}, {2, 0}});
  const auto g = DirectedMultigraph::from_matrix(f);
  EXPECT_EQ(static_cast<int>(g.edges.size()) - loop_number(g), 1);
  IntegralCache cache(400'000, 17);
  const auto d = div_sum_check(f, cache);
  EXPECT_LT(d.z, 4.0);
  EXPECT_NEAR(d.rhs, melon_oracle(4), 4 * d.rhs_err);
}

TEST(DivSum, OrderThreeSweep) {
  IntegralCache cache(200'000, 23);
  for (const auto& f : enumerate_phi4(3)) EXPECT_LT(div_sum_check(f, cache).z, 4.0) << f.to_string();
}

TEST(IntegralCache, SharesIsomorphismClasses) {
  IntegralCache cache(10'000, 1);
  const auto a = cache.get(graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  const auto b = cache.get(graph({{0, 2, 0}, {0, 0, 2}, {2, 0, 0}}));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(cache.entries().size(), 1u);
}

TEST(Seeds, DerivedSeedsDependOnLabel) {
  EXPECT_EQ(derive_seed(7, "x"), derive_seed(7, "x"));
  EXPECT_NE(derive_seed(7, "x"), derive_seed(7, "y"));
  EXPECT_NE(derive_seed(7, "x"), derive_seed(8, "x"));
}
