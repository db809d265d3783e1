#include "mpr/balanced_matrix.hpp"
#include "mpr/weights.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace mpr;

namespace {

// Sum of m^cycn(sigma) over every sigma in S_R whose slot adjacency is F.
// Vertex u owns dias_u consecutive slots.
std::map<int, long> permutation_oracle(const BalancedMatrix& f) {
  std::vector<int> block;
  for (int u = 0; u < f.q(); ++u)
    for (int k = 0; k < f.dia(u); ++k) block.push_back(u);
  const std::size_t R = block.size();
  std::vector<int> sigma(R);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::map<int, long> out;
  do {
    std::vector<int> adj(static_cast<std::size_t>(f.q() * f.q()), 0);
    for (std::size_t k = 0; k < R; ++k) ++adj[static_cast<std::size_t>(block[k] * f.q() + block[std::size_t(sigma[k])])];
    if (adj != f.entries()) continue;
    std::vector<bool> seen(R, false);
    int cycles = 0;
    for (std::size_t k = 0; k < R; ++k) {
      if (seen[k]) continue;
      ++cycles;
      for (std::size_t j = k; !seen[j]; j = std::size_t(sigma[j])) seen[j] = true;
    }
    ++out[cycles];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST(Weights, BananaExample) {
  const auto f = BalancedMatrix::from_rows({{0, 2}, {2, 0}});
  const auto w = wei_partition(f);
  EXPECT_EQ(w.coefficient_of_m(0), 0);
  EXPECT_EQ(w.coefficient_of_m(1), 2);
  EXPECT_EQ(w.coefficient_of_m(2), 2);
  EXPECT_EQ(w.coefficient_of_m(3), 0);
  EXPECT_EQ(w, wei_bruteforce(f));
  EXPECT_EQ(w.total(), 4);
}

TEST(Weights, ThreeCycleIsSingleCycle) {
  const auto w = wei_partition(BalancedMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(w.coefficient_of_m(1), 1);
  EXPECT_EQ(w.total(), 1);
}

TEST(Weights, PartitionMatchesPermutationOracle) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& f : enumerate_mf(r, 0, 2, 2)) {
      const auto w = wei_partition(f);
      const auto oracle = permutation_oracle(f);
      long total = 0;
      for (const auto& [power, count] : oracle) {
        EXPECT_EQ(w.coefficient_of_m(power), count) << f.to_string() << " m^" << power;
        total += count;
      }
      EXPECT_EQ(w.total(), total) << f.to_string();
    }
}

TEST(Weights, PartitionMatchesBruteForceWithOuterVertex) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& f : enumerate_mf(r, 1, 2, 2)) EXPECT_EQ(wei_partition(f), wei_bruteforce(f)) << f.to_string();
}

TEST(Weights, RelabelingInvariance) {
  for (const auto& f : enumerate_mf(3, 1, 2, 2))
    for (const auto& s : block_permutations(3, 1)) EXPECT_EQ(wei_partition(permute(f, s)), wei_partition(f));
  for (const auto& f : enumerate_mf(4, 0, 2, 2))
    for (const auto& s : block_permutations(4, 0)) EXPECT_EQ(wei_partition(permute(f, s)), wei_partition(f));
}

TEST(Weights, NonemptyWithNonnegativeIntegerCoefficients) {
  for (int p = 0; p <= 1; ++p)
    for (int r = 1; r <= 3; ++r)
      for (const auto& f : enumerate_mf(r, p, 2, 3)) {
        const auto w = wei_partition(f);
        EXPECT_GT(w.total(), 0) << f.to_string();
        for (const auto& a : w.a) {
          EXPECT_GE(a, 0);
          EXPECT_EQ(denominator(a), 1);
        }
      }
}

TEST(A1Closed, BananaValue) { EXPECT_EQ(a1_closed(BalancedMatrix::from_rows({{0, 2}, {2, 0}})), 2); }

TEST(A1Closed, MatchesLowestCoefficient) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& f : enumerate_phi4(r)) EXPECT_EQ(a1_closed(f), wei_partition(f).coefficient_of_m(1)) << f.to_string();
}

TEST(A1Closed, RejectsOtherDegrees) {
  EXPECT_ANY_THROW(a1_closed(BalancedMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
}
