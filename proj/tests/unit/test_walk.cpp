#include "mpr/feynman.hpp"
#include "mpr/parallel.hpp"
#include "mpr/special.hpp"
#include "mpr/walk.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <set>

using namespace mpr;

namespace {

std::map<int, long> recount(const WalkSample& w, bool time_zero) {
  static constexpr int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
  std::map<std::pair<long, long>, int> visits;
  long x = 0, y = 0;
  if (time_zero) ++visits[{0, 0}];
  for (const auto s : w.steps) {
    x += dx[s];
    y += dy[s];
    ++visits[{x, y}];
  }
  std::map<int, long> h;
  for (const auto& [p, c] : visits) ++h[c];
  return h;
}

}  // namespace

TEST(WalkSample, StringRoundtrip) {
  const auto w = WalkSample::from_string(WalkKind::closed, "ENWS");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.to_string(), "ENWS");
  EXPECT_ANY_THROW(WalkSample::from_string(WalkKind::free, "EX"));
  EXPECT_EQ(walk_kind_from_string("closed"), WalkKind::closed);
  EXPECT_ANY_THROW(walk_kind_from_string("loop"));
}

TEST(Multiplicity, EWEWByHand) {
  const auto w = WalkSample::from_string(WalkKind::closed, "EWEW");
  // Times 1..4 occupy (1,0), (0,0), (1,0), (0,0).
  const auto h = visit_histogram(w);
  EXPECT_EQ(h, (std::map<int, long>{{2, 2}}));
  EXPECT_EQ(multiplicity_range(w, 2).at(1), 2);
  EXPECT_EQ(multiplicity_range(w, 2).at(2), 0);
  VisitConvention zero;
  zero.count_time_zero = true;
  EXPECT_EQ(visit_histogram(w, zero), (std::map<int, long>{{2, 1}, {3, 1}}));
  EXPECT_EQ(multiplicity_range(w, 1, zero).at(1), 1);
  VisitConvention exact;
  exact.even_multiplicity = false;
  EXPECT_EQ(multiplicity_range(w, 2, exact).at(2), 2);
  EXPECT_EQ(multiplicity_range(w, 2, exact).at(1), 0);
}

TEST(Multiplicity, StraightWalkHasNoMultiplePoints) {
  const auto w = WalkSample::from_string(WalkKind::free, "EEEE");
  for (const auto& [k, n] : multiplicity_range(w, 3)) EXPECT_EQ(n, 0) << k;
  EXPECT_EQ(visit_histogram(w), (std::map<int, long>{{1, 4}}));
}

TEST(Multiplicity, HashMatchesRecountOnRandomWalks) {
  for (int i = 0; i < 2000; ++i) {
    const bool closed = i % 2;
    const auto w = sample_walk(closed ? WalkKind::closed : WalkKind::free, closed ? 10 : 20, derive_seed(99, std::to_string(i)));
    ASSERT_EQ(w.length(), 20u);
    for (const bool z : {false, true}) {
      VisitConvention c;
      c.count_time_zero = z;
      EXPECT_EQ(visit_histogram(w, c), recount(w, z));
      EXPECT_EQ(visit_histogram_naive(w, c), recount(w, z));
    }
  }
}

TEST(Multiplicity, CounterSurvivesGrowthAndReuse) {
  LatticeCounter counter(4);
  std::map<std::pair<int, int>, int> ref;
  for (int i = 0; i < 5000; ++i) {
    const int x = (i * 7919) % 211 - 105, y = (i * 104729) % 173 - 86;
    counter.visit(x, y);
    ++ref[{x, y}];
  }
  EXPECT_EQ(counter.distinct_points(), ref.size());
  std::map<int, long> h;
  for (const auto& [p, c] : ref) ++h[c];
  EXPECT_EQ(counter.histogram(), h);
  counter.clear();
  EXPECT_EQ(counter.distinct_points(), 0u);
  counter.visit(-3, 1 << 20);
  counter.visit(-3, 1 << 20);
  EXPECT_EQ(counter.histogram(), (std::map<int, long>{{2, 1}}));
}

TEST(Sampler, ClosedWalksAreBalancedAndDeterministic) {
  for (int i = 0; i < 200; ++i) {
    const auto w = sample_walk(WalkKind::closed, 50, 1000 + i);
    ASSERT_EQ(w.length(), 100u);
    std::array<int, 4> c{};
    for (const auto s : w.steps) ++c[s];
    EXPECT_EQ(c[0], c[1]);
    EXPECT_EQ(c[2], c[3]);
  }
  EXPECT_EQ(sample_walk(WalkKind::closed, 64, 5).steps, sample_walk(WalkKind::closed, 64, 5).steps);
  EXPECT_EQ(sample_walk(WalkKind::free, 64, 5).steps, sample_walk(WalkKind::free, 64, 5).steps);
  EXPECT_NE(sample_walk(WalkKind::free, 64, 5).steps, sample_walk(WalkKind::free, 64, 6).steps);
}

TEST(Sampler, FreeStepFrequenciesUniform) {
  const auto w = sample_walk(WalkKind::free, 400'000, 17);
  std::array<double, 4> c{};
  for (const auto s : w.steps) ++c[s];
  double chi2 = 0.0;
  for (const double x : c) chi2 += (x - 1e5) * (x - 1e5) / 1e5;
  EXPECT_GT(boost::math::cdf(boost::math::complement(boost::math::chi_squared(3), chi2)), 1e-3);
}

TEST(Sampler, ClosedWalkEnumeration) {
  EXPECT_EQ(enumerate_closed_walks(1).size(), 4u);
  EXPECT_EQ(enumerate_closed_walks(2).size(), 36u);
  const auto three = enumerate_closed_walks(3);
  EXPECT_EQ(three.size(), 400u);
  std::set<std::string> distinct;
  for (const auto& w : three) distinct.insert(w.to_string());
  EXPECT_EQ(distinct.size(), 400u);
}

TEST(Sampler, OneStepClosedWalksUniformByHand) {
  std::map<std::string, long> counts;
  for (int i = 0; i < 100'000; ++i) ++counts[sample_walk(WalkKind::closed, 1, derive_seed(3, std::to_string(i))).to_string()];
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& w : {"EW", "WE", "NS", "SN"}) EXPECT_TRUE(counts.count(w)) << w;
  double chi2 = 0.0;
  for (const auto& [w, c] : counts) chi2 += (c - 25'000.0) * (c - 25'000.0) / 25'000.0;
  EXPECT_GT(boost::math::cdf(boost::math::complement(boost::math::chi_squared(3), chi2)), 1e-3);
}

TEST(Sampler, ChiSquareUniformitySmallN) {
  for (long n = 1; n <= 3; ++n) {
    const auto r = closed_sampler_uniformity(n, 200'000, derive_seed(8, std::to_string(n)));
    EXPECT_GT(r.p_value, 1e-3) << n;
    EXPECT_EQ(r.categories, n == 1 ? 4 : n == 2 ? 36 : 400);
  }
}

TEST(Beta, CenteredAndDeterministic) {
  const auto a = beta_statistic(WalkKind::closed, 256, 1, 1000, 21);
  EXPECT_LT(std::abs(a.mean), 1e-12);
  EXPECT_GT(a.var, 0.0);
  EXPECT_GT(a.var_stderr, 0.0);
  EXPECT_NEAR(a.scale, std::pow(std::log(512.0), 3) / (4 * std::pow(kPi, 3) * 512.0), 1e-15);
  const auto b = beta_statistic(WalkKind::closed, 256, 1, 1000, 21);
  EXPECT_EQ(a.var, b.var);
  EXPECT_EQ(a.m3, b.m3);
}

TEST(Beta, IndependentOfWorkerCount) {
  const auto one = beta_statistic(WalkKind::free, 512, 2, 1000, 4);
  set_worker_count(3);
  const auto three = beta_statistic(WalkKind::free, 512, 2, 1000, 4);
  set_worker_count(1);
  EXPECT_EQ(one.var, three.var);
  EXPECT_EQ(one.m3, three.m3);
  EXPECT_EQ(one.raw_mean_count, three.raw_mean_count);
}

TEST(Beta, RawMeanMatchesDirectAverage) {
  const auto b = beta_statistic(WalkKind::free, 300, 1, 1000, 77);
  EXPECT_GT(b.raw_mean_count, 0.0);
  EXPECT_ANY_THROW(beta_statistic(WalkKind::free, 300, 1, 1, 77));
}
