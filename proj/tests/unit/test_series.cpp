#include "mpr/feynman.hpp"
#include "mpr/series.hpp"
#include "mpr/special.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace mpr;
using V = CouplingSeries::Variable;

namespace {

CouplingSeries random_series(std::mt19937_64& rng, int order, bool unit_constant = false) {
  std::normal_distribution<double> n(0.0, 1.0);
  CouplingSeries s(V::t, order);
  for (int k = 0; k <= order; ++k) s.set(k, cplx(n(rng), n(rng)), 0.0);
  if (unit_constant) s.set(0, 1.0 + 0.1 * cplx(n(rng), n(rng)));
  return s;
}

void expect_series_near(const CouplingSeries& a, const CouplingSeries& b, double tol) {
  ASSERT_EQ(a.order(), b.order());
  for (int k = 0; k <= a.order(); ++k) EXPECT_LT(std::abs(a.coeff(k) - b.coeff(k)), tol) << "k=" << k;
}

// A synthetic table: gamma0_r1 = g0[r], gC_r0 = gc[r], errors 1% of the value.
CoefficientTable table(const std::vector<double>& g0, const std::vector<double>& gc) {
  CoefficientTable t;
  t.order = static_cast<int>(g0.size()) - 1;
  for (int r = 0; r <= t.order; ++r) {
    OrderCoefficients row;
    row.r = r;
    row.gamma0_r1 = {g0[std::size_t(r)], 0.01 * std::abs(g0[std::size_t(r)])};
    row.gamma0_r1_alt = row.gamma0_r1;
    row.gC_r0 = {gc[std::size_t(r)], 0.01 * std::abs(gc[std::size_t(r)])};
    row.gC_r0_alt = row.gC_r0;
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace

TEST(CouplingSeriesAlgebra, RingAxiomsAtTruncation) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int M = 1 + trial % 6;
    const auto a = random_series(rng, M), b = random_series(rng, M), c = random_series(rng, M);
    expect_series_near((a * b) * c, a * (b * c), 1e-11);
    expect_series_near(a * (b + c), a * b + a * c, 1e-11);
    expect_series_near(a * b, b * a, 1e-12);
    expect_series_near((a + b) - b, a, 1e-12);
  }
}

TEST(CouplingSeriesAlgebra, ReciprocalRoundtrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, 6, true);
    expect_series_near(a * a.reciprocal(), CouplingSeries::monomial(V::t, 6, 0), 1e-10);
  }
  CouplingSeries z(V::t, 3);
  z.set(1, 1.0);
  EXPECT_ANY_THROW(z.reciprocal());
}

TEST(CouplingSeriesAlgebra, ErrorsPropagateLinearly) {
  CouplingSeries a(V::minus_g, 2), b(V::minus_g, 2);
  a.set(0, 2.0, 0.1);
  b.set(0, 3.0, 0.2);
  const auto s = a + b, p = a * b;
  EXPECT_NEAR(s.error(0), std::hypot(0.1, 0.2), 1e-12);
  EXPECT_NEAR(p.error(0), std::hypot(3.0 * 0.1, 2.0 * 0.2), 1e-9);
  EXPECT_NEAR(a.reciprocal().error(0), 0.1 / 4.0, 1e-12);
}

TEST(CouplingSeriesAlgebra, MixedVariablesRejected) {
  EXPECT_ANY_THROW(CouplingSeries(V::t, 2) + CouplingSeries(V::minus_g, 2));
}

TEST(ReciprocalGamma, PowerSeriesCoefficients) {
  const auto a = reciprocal_gamma_coefficients(25);
  const double g = kEulerGamma, pi2 = kPi * kPi;
  EXPECT_DOUBLE_EQ(a[0], 0.0);
  EXPECT_DOUBLE_EQ(a[1], 1.0);
  EXPECT_NEAR(a[2], g, 1e-15);
  EXPECT_NEAR(a[3], g * g / 2 - pi2 / 12, 1e-15);
  for (const double z : {0.3, -0.4, 0.9}) {
    double s = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) s = s * z + a[k];
    EXPECT_NEAR(s, 1.0 / std::tgamma(z), 1e-13);
  }
}

TEST(ReciprocalGamma, ShiftedExpansionAgainstPolygamma) {
  // 1/Gamma(r + e) = (1/Gamma(r)) (1 - psi e + (psi^2 - psi') e^2 / 2 + ...), e = -i t / 2 pi.
  for (int r = 1; r <= 5; ++r) {
    const ReciprocalGammaExpansion x(r, 4);
    const double G = std::tgamma(r), psi = boost::math::digamma(double(r)), psi1 = boost::math::trigamma(double(r));
    const cplx e1(0.0, -1.0 / (2 * kPi));
    EXPECT_NEAR(std::abs(x.coefficient(0) - 1.0 / G), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(x.coefficient(1) - (-psi / G) * e1), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(x.coefficient(2) - ((psi * psi - psi1) / (2 * G)) * e1 * e1), 0.0, 1e-14);
    EXPECT_EQ(x.shifted(r - 2), cplx(0.0));
    EXPECT_EQ(x.shifted(r - 1), x.coefficient(0));
  }
}

TEST(ReciprocalGamma, SeriesMatchesComplexReciprocalGamma) {
  for (int r = 1; r <= 4; ++r) {
    const ReciprocalGammaExpansion x(r, 12);
    for (const double t : {0.5, 1.5, -2.0}) {
      cplx s = 0.0;
      for (int p = 12; p >= 0; --p) s = s * t + x.coefficient(p);
      EXPECT_LT(std::abs(s - rgamma(cplx(r, -t / (2 * kPi)))), 1e-10) << "r=" << r << " t=" << t;
    }
  }
}

TEST(Streams, SigmaUDivisionRoundtrip) {
  const auto t = table({0, 0, 0.0042, -0.0011, 0.0005, 0.0002}, {0, 0, 0.059, 0.01, 0.002, 0.001});
  const auto s = sigmaU_m0(t);
  const auto back = s * (CouplingSeries::monomial(V::minus_g, 5, 0) +
                         CouplingSeries::monomial(V::minus_g, 5, 1, -1.0 / (2 * kPi)));
  for (int k = 0; k <= 5; ++k) {
    double expected = 0.0;
    if (k >= 3) expected = 2.0 * (k - 2) * t.rows[std::size_t(k - 1)].gamma0_r1.value;
    EXPECT_NEAR(std::abs(back.coeff(k) - expected), 0.0, 1e-15) << k;
  }
  EXPECT_NEAR(s.coeff(3).real(), 2.0 * 0.0042, 1e-15);
}

TEST(Streams, SigmaUVanishesWithoutInput) {
  const auto s = sigmaU_m0(table({0, 0, 0, 0, 0}, {0, 0, 0.05, 0.01, 0}));
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(s.coeff(k), cplx(0.0));
}

TEST(Streams, TwoPointReciprocalAnchors) {
  const auto t = table({0, 0, 0.0042, -0.0011, 0.0005}, {0, 0, 0.059, 0.01, 0.002});
  const auto z2 = gamma2_series(t);
  EXPECT_NEAR(std::abs(z2.coeff(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z2.coeff(1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z2.coeff(2) + (gC_series(t).coeff(2) + sigmaU_m0(t).coeff(2))), 0.0, 1e-15);
  expect_series_near(z2 * g2_series(t), CouplingSeries::monomial(V::minus_g, 4, 0), 1e-14);
  const auto g0 = gamma0_series(t);
  EXPECT_EQ(g0.coeff(0), cplx(0.0));
  EXPECT_EQ(g0.coeff(1), cplx(0.0));
  EXPECT_EQ(g0.coeff(3), cplx(-0.0011));
}

TEST(Phi, NormalizedAndCentered) {
  const auto t = table({0, 0, 0.0042, -0.0011, 0.0005}, {0, 0, 0.059, 0.01, 0.002});
  for (const int which : {0, 2}) {
    const auto phi = phi_series(which, t, 4);
    EXPECT_NEAR(std::abs(phi.coeff(0) - 1.0), 0.0, 1e-14);
    const auto m = moments_from_series(phi);
    EXPECT_NEAR(std::abs(m[1]), 0.0, 1e-14) << which;
  }
}

TEST(Phi, SecondMomentsFromPolygammaOracle) {
  const double G21 = 0.0042, GC2 = 0.059;
  const auto t = table({0, 0, G21}, {0, 0, GC2});
  const auto m0 = moments_from_series(phi_series(0, t, 2));
  const auto m2 = moments_from_series(phi_series(2, t, 2));
  const double zeta2 = boost::math::zeta(2.0);
  EXPECT_NEAR(m0[2].real(), 8 * kPi * G21 - zeta2 / (4 * kPi * kPi), 1e-14);
  EXPECT_NEAR(m2[2].real(), GC2 - boost::math::trigamma(2.0) / (4 * kPi * kPi), 1e-14);
  EXPECT_NEAR(m0[2].imag(), 0.0, 1e-15);
  EXPECT_NEAR(m2[2].imag(), 0.0, 1e-15);
}

TEST(Phi, RejectsShortTable) { EXPECT_ANY_THROW(phi_series(0, table({0, 0, 0.004}, {0, 0, 0.05}), 3)); }

TEST(Coefficients, OrderTwoMatchesBananaClosedForm) {
  IntegralCache vac(400'000, 1), legs(400'000, 2);
  const auto t = compute_coefficients(2, vac, legs);
  const auto& row = t.rows.at(2);
  const double banana = 7.0 * boost::math::zeta(3.0);
  EXPECT_NEAR(row.gamma0_r1.value, banana / std::pow(4 * kPi, 3), 4 * row.gamma0_r1.error);
  EXPECT_NEAR(row.gamma0_r1.value, row.gamma0_r1_alt.value, 1e-12 * row.gamma0_r1.value);
  EXPECT_NEAR(row.gC_r0.value, row.gC_r0_alt.value, 4 * std::hypot(row.gC_r0.error, row.gC_r0_alt.error));
  EXPECT_EQ(t.rows.at(0).gamma0_r1.value, 0.0);
  EXPECT_EQ(t.rows.at(1).gamma0_r1.value, 0.0);
}

TEST(Coefficients, OrderThreeTwoPathAgreement) {
  IntegralCache vac(200'000, 3), legs(200'000, 4);
  const auto t = compute_coefficients(3, vac, legs);
  for (int r = 2; r <= 3; ++r) {
    const auto& row = t.rows.at(std::size_t(r));
    EXPECT_NEAR(row.gamma0_r1.value, row.gamma0_r1_alt.value, 1e-12 * std::abs(row.gamma0_r1.value));
    EXPECT_NEAR(row.gC_r0.value, row.gC_r0_alt.value, 4 * std::hypot(row.gC_r0.error, row.gC_r0_alt.error)) << r;
  }
  EXPECT_ANY_THROW(compute_coefficients(7, vac, legs));
}
