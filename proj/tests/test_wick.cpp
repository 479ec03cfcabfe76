#include <gtest/gtest.h>

#include <random>

#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/poly/families.hpp"
#include "halfperm/wick/convolution.hpp"
#include "halfperm/wick/verify.hpp"
#include "halfperm/wick/wick.hpp"
#include "oracles.hpp"

using namespace halfperm;

TEST(Algebra, AxiomsEnforced) {
  EXPECT_NO_THROW(TracialAlgebra::matrices(2));
  EXPECT_NO_THROW(TracialAlgebra::diagonal({0.2, 0.3, 0.5}));
  EXPECT_THROW(TracialAlgebra::diagonal({0.5, 0.6}), std::invalid_argument);   // psi(1) != 1
  EXPECT_THROW(TracialAlgebra::diagonal({-0.5, 1.5}), std::invalid_argument);  // not positive
}

TEST(Algebra, NormalizedTrace) {
  const TracialAlgebra m2 = TracialAlgebra::matrices(2);
  EXPECT_NEAR(std::abs(m2.psi(m2.unit()) - Complex(1)), 0.0, 1e-15);
  std::mt19937_64 rng(3);
  const Element a = m2.random_element(rng), b = m2.random_element(rng);
  EXPECT_NEAR(std::abs(m2.psi(m2.multiply(a, b)) - m2.psi(m2.multiply(b, a))), 0.0, 1e-12);
}

TEST(Fock, FreePoissonMomentsAreCatalan) {
  // In the vacuum state p(1) has the Marchenko-Pastur law with c = 1.
  const FockSpace space(TracialAlgebra::scalars(), 7);
  const Element one = space.algebra().unit();
  FockBatch x = space.vacuum();
  for (int n = 1; n <= 6; ++n) {
    x = space.p(one, x);
    const Complex moment = space.inner(x, space.vacuum())(0, 0);
    EXPECT_NEAR(moment.real(), oracle::catalan(n).get_d(), 1e-9) << "n=" << n;
  }
}

TEST(Fock, ScalarWickPolynomialsArePi) {
  // W(1^{(x) n}) = Pi_n(p(1)) at c = 1: both send the vacuum to 1^{(x) n}.
  const FockSpace space(TracialAlgebra::scalars(), 6);
  const Element one = space.algebra().unit();
  for (int n = 1; n <= 5; ++n) {
    const std::vector<double> coeff = pi_poly(n).coefficients_at(1.0);
    FockBatch power = space.vacuum(), acc = coeff[0] * space.vacuum();
    for (int k = 1; k <= n; ++k) {
      power = space.p(one, power);
      acc += coeff[k] * power;
    }
    const Word word(n, one);
    EXPECT_LT(relative_residual(acc, space.tensor(word)), 1e-12) << "n=" << n;
    EXPECT_LT(relative_residual(apply_wick(space, word, space.vacuum()), space.tensor(word)), 1e-12);
  }
}

TEST(Fock, CreationAnnihilationAdjoint) {
  const FockSpace space(TracialAlgebra::matrices(2), 4);
  std::mt19937_64 rng(11);
  const Element d = space.algebra().random_element(rng);
  const FockBatch x = space.random_up_to(2, 3, rng), y = space.random_up_to(3, 3, rng);
  const Eigen::MatrixXcd lhs = space.inner(space.creation(d, x), y);
  const Eigen::MatrixXcd rhs = space.inner(x, space.annihilation(d, y));
  EXPECT_LT(relative_residual(lhs, rhs), 1e-12);
}

TEST(Convolution, SizeIsTwiceMinPlusOne) {
  std::vector<LinearHalfPerm> all;
  for (int k = 0; k <= 3; ++k) {
    auto cell = enum_ncl(3, k);
    all.insert(all.end(), cell.begin(), cell.end());
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto out = convolution(a, b);
      EXPECT_EQ(static_cast<int>(out.size()), 2 * std::min(a.open_count(), b.open_count()) + 1);
      for (const auto& h : out) EXPECT_EQ(h.size(), a.size() + b.size());
    }
}

TEST(Convolution, KZeroIsConcatenation) {
  const auto closed = enum_ncl(2, 0);
  const auto open = enum_ncl(2, 2);
  ASSERT_FALSE(closed.empty());
  ASSERT_FALSE(open.empty());
  const auto out = convolution(closed.front(), open.front());
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.front(), concatenate(closed.front(), open.front()));
}

TEST(Suites, WickAtDepthFour) {
  WickConfig cfg;
  cfg.depth = 4;
  cfg.max_word = 2;
  const auto checks = wick_suite(cfg);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) {
    EXPECT_TRUE(c.pass) << c.identity << " " << c.instance << " " << c.detail;
    if (!std::isnan(c.residual)) {
      EXPECT_LT(c.residual, kWickTolerance);
    }
  }
}
