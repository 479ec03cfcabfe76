#include <gtest/gtest.h>

#include "halfperm/poly/families.hpp"
#include "halfperm/poly/golden.hpp"
#include "halfperm/poly/identities.hpp"
#include "halfperm/poly/series.hpp"
#include "halfperm/poly/transition_matrix.hpp"
#include "oracles.hpp"

using namespace halfperm;

namespace {

// Integral of a polynomial in x against the Marchenko-Pastur law, via the Narayana moments.
PolyC integrate(const PolyXC& p) {
  PolyC out;
  for (int k = 0; k <= p.degree(); ++k) out += p[k] * oracle::mp_moment(k);
  return out;
}

void expect_all_pass(const std::vector<Check>& checks) {
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.identity << " " << c.instance << " " << c.detail;
}

}  // namespace

TEST(PolyC, ArithmeticAndRendering) {
  const PolyC c = PolyC::c();
  const PolyC a = PolyC(1) + c;
  EXPECT_EQ(a * a, PolyC::from_ints({1, 2, 1}));
  EXPECT_EQ((a * a - a * a).degree(), -1);
  EXPECT_EQ((a * a).to_string(), "1 + 2*c + c^2");
  EXPECT_EQ(PolyC::from_ints({0, 2, 4}).divided_by_c(), PolyC::from_ints({2, 4}));
  EXPECT_EQ(a.pow(3).evaluate(Rational(1, 2)), Rational(27, 8));
  EXPECT_DOUBLE_EQ(a.pow(3).evaluate(0.5), 3.375);
  EXPECT_EQ(PolyC::from_rational_strings(a.to_rational_strings()), a);
}

TEST(Families, PrintedGammaTildeAndPi) {
  expect_all_pass(check_golden_forward());
  // Pi_1 = x - c, Pi_2 = x^2 - (1 + 2c) x + c^2.
  EXPECT_EQ(pi_poly(1), PolyXC({-PolyC::c(), PolyC(1)}));
  EXPECT_EQ(pi_poly(2), PolyXC({PolyC::monomial(2), PolyC::from_ints({-1, -2}), PolyC(1)}));
  EXPECT_EQ(gamma(1), PolyXC({-PolyC::c(), PolyC(1)}));
  EXPECT_EQ(d_constant(0), PolyC(-1));
  EXPECT_EQ(d_constant(3), PolyC::from_ints({1, -1}));
}

TEST(Families, GammaCenteredAgainstMarchenkoPastur) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(integrate(gamma(n)), PolyC()) << "n=" << n;
}

TEST(Families, GammaTildeMeansAlternate) {
  for (int n = 2; n <= 10; ++n)
    EXPECT_EQ(integrate(gamma_tilde(n)), PolyC(n % 2 == 0 ? 1 : -1) * PolyC::from_ints({1, -1})) << "n=" << n;
}

TEST(Families, PiOrthogonalWithNormCPowerN) {
  const auto pi = family_members(Family::Pi, 8);
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n) {
      const PolyC expected = m == n ? PolyC::monomial(n) : PolyC();
      EXPECT_EQ(integrate(pi[m] * pi[n]), expected) << m << "," << n;
    }
}

TEST(Families, ArcsineMomentSeries) {
  // G0 has coefficients sum_j C(m,j)^2 c^j, the arcsine moments.
  const SeriesZ g0 = series_G0(12);
  for (int m = 0; m <= 12; ++m) {
    PolyC expected;
    for (int j = 0; j <= m; ++j) expected += PolyC::monomial(j, Rational(oracle::binomial(m, j) * oracle::binomial(m, j)));
    EXPECT_EQ(g0[m], expected);
  }
}

TEST(TransitionMatrix, InverseIsExpansionOfPowers) {
  for (Family f : {Family::GammaTilde, Family::Gamma, Family::Pi}) {
    const TransitionMatrix fwd = transition_matrix(f, 9);
    const TransitionMatrix inv = invert_unitriangular(fwd);
    EXPECT_TRUE((fwd * inv).is_identity());
    EXPECT_TRUE(inv.is_integral());
    EXPECT_EQ(invert_unitriangular(inv), fwd);
  }
}

TEST(TransitionMatrix, FirstColumnsAreMoments) {
  // x^n = sum_k p_{n,k} Pi_k, and Pi_k integrates to 0 for k >= 1.
  const TransitionMatrix p = invert_unitriangular(transition_matrix(Family::Pi, 10));
  for (int n = 0; n < 10; ++n) EXPECT_EQ(p(n, 0), oracle::mp_moment(n));
}

TEST(TransitionMatrix, RejectsBadInput) {
  EXPECT_THROW(transition_matrix(Family::Pi, 0), std::invalid_argument);
  EXPECT_THROW(parse_family("delta"), std::invalid_argument);
}

TEST(Golden, PrintedInverseTables) { expect_all_pass(check_golden_tables()); }

TEST(Identities, PolynomialRecursions) { expect_all_pass(check_polynomial_identities(12)); }

TEST(Identities, SeriesToOrderTwelve) { expect_all_pass(check_series_identities(12)); }

TEST(Series, MarchenkoPasturMomentsMatchNarayana) {
  const SeriesZ p0 = series_P0(12);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(p0[n], oracle::mp_moment(n)) << "n=" << n;
}
