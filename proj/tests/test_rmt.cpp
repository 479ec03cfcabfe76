#include <gtest/gtest.h>

#include <cstdlib>

#include "halfperm/poly/families.hpp"
#include "halfperm/rmt/experiments.hpp"
#include "halfperm/rmt/report.hpp"
#include "oracles.hpp"

using namespace halfperm;

namespace {

// Exact finite-N moments of Tr X^k, k <= 3, for X = G^*G with E|g|^2 = 1/N.
Rational exact_trace_moment(int k, long M, long N) {
  switch (k) {
    case 0: return Rational(N);
    case 1: return Rational(M);
    case 2: return Rational(M) + Rational(M * M, N);
    case 3: return Rational(M * (M * M + 3 * M * N + N * N + 1), N * N);
  }
  throw std::invalid_argument("moment degree");
}

Rational exact_gamma_mean(int n, long M, long N, const Rational& c) {
  const PolyXC g = gamma(n);
  Rational out = 0;
  for (int k = 0; k <= n; ++k) out += g[k].evaluate(c) * exact_trace_moment(k, M, N);
  return out;
}

}  // namespace

TEST(Config, RatioAndRows) {
  const auto a = EnsembleConfig::with_ratio(20, Rational(9, 8), 1, 10, 1);  // cN = 22.5
  EXPECT_EQ(a.M, 23);
  EXPECT_EQ(a.c_prime(), Rational(1, 2));
  const auto b = EnsembleConfig::with_rows(30, 45, 2, 10, 1);
  EXPECT_EQ(b.c, Rational(3, 2));
  EXPECT_EQ(b.c_prime(), 0);
  EXPECT_THROW(EnsembleConfig::with_rows(0, 4, 1, 10, 1), std::invalid_argument);
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Config, StreamsDiffer) {
  EXPECT_NE(stream_seed(1, 0, 0), stream_seed(1, 0, 1));
  EXPECT_NE(stream_seed(1, 0, 0), stream_seed(1, 1, 0));
  EXPECT_NE(stream_seed(1, 0, 0), stream_seed(2, 0, 0));
}

TEST(Wishart, HermitianPositive) {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXcd x = sample_wishart(7, 5, rng);
  EXPECT_LT((x - x.adjoint()).norm(), 1e-13);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
}

TEST(Statistics, MixedCanonicalForm) {
  const auto a = TraceStatistic::mixed({2, 1}, {1, 2});
  const auto b = TraceStatistic::mixed({1, 2}, {2, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.key(), "S[(1,2),(2,1)]");
  EXPECT_EQ(TraceStatistic::mixed({1, 1, 1, 1}, {1, 2, 1, 2}).symmetry(), 2);
  EXPECT_EQ(TraceStatistic::mixed({1, 2, 1, 2}, {1, 2, 1, 2}).symmetry(), 2);
  EXPECT_EQ(TraceStatistic::mixed({1, 1, 1}, {1, 2, 3}).symmetry(), 1);
  EXPECT_THROW(TraceStatistic::mixed({1, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(TraceStatistic::mixed({1, 1, 1}, {1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(TraceStatistic::mixed({1}, {1}), std::invalid_argument);
}

TEST(Statistics, MixedClassesEnumerated) {
  EXPECT_EQ(mixed_statistics(2, 3).size(), 3u);
  // p = 3, degree 3: k = 2 gives 3 + 6 classes; k = 3 gives the two orientations.
  EXPECT_EQ(mixed_statistics(3, 3).size(), 11u);
}

TEST(Statistics, ThreadCountDoesNotChangeTheTable) {
  const auto cfg = EnsembleConfig::with_ratio(12, Rational(1), 2, 64, 9);
  const std::vector<TraceStatistic> stats{TraceStatistic::gamma(2, 1), TraceStatistic::mixed({1, 2}, {1, 2})};
  const SampleTable one = sample_statistics(cfg, stats, 1);
  const SampleTable three = sample_statistics(cfg, stats, 3);
  EXPECT_EQ(one.values, three.values);
  EXPECT_EQ(sample_statistics(cfg, stats, 2).values, one.values);
}

TEST(Statistics, IndexAboveP) {
  const auto cfg = EnsembleConfig::with_ratio(4, Rational(1), 1, 4, 1);
  EXPECT_THROW(sample_statistics(cfg, {TraceStatistic::gamma(1, 2)}, 1), std::invalid_argument);
}

TEST(Predictions, RawCovarianceMatchesAnnularCount) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      EXPECT_EQ(predict_covariance(m, n).evaluate(Rational(1)), Rational(oracle::annular_count(m, n)));
  EXPECT_EQ(predict_covariance(1, 1), PolyC::c());
}

TEST(Predictions, GammaMeanSignFromExactMoments) {
  // E Tr Gamma_n(X) - (-1)^(n+1) c' = O(1/N) for n <= 3.
  for (long N : {20L, 100L, 1004L}) {
    const Rational c(9, 8);
    const long M = (9 * N + 4) / 8;  // cN + 1/2
    const Rational cp = Rational(M) - c * N;
    ASSERT_EQ(cp, Rational(1, 2));
    for (int n = 1; n <= 3; ++n) {
      const Rational gap = exact_gamma_mean(n, M, N, c) - Rational(n % 2 == 1 ? 1 : -1) * cp;
      EXPECT_LE(std::abs(gap.get_d()), 4.0 / N) << "n=" << n << " N=" << N;
      EXPECT_DOUBLE_EQ(predicted_mean(TraceStatistic::gamma(n, 1), c.get_d(), cp.get_d()),
                       (n % 2 == 1 ? 1 : -1) * cp.get_d());
    }
  }
}

TEST(Predictions, PiMeans) {
  EXPECT_DOUBLE_EQ(predicted_mean(TraceStatistic::pi(3, 1), 2.0, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(predicted_mean(TraceStatistic::pi(2, 1), 2.0, 0.5), 0.0);
  EXPECT_THROW(predicted_mean(TraceStatistic::power(2, 1), 1.0, 0.0), std::invalid_argument);
}

TEST(Band, Tolerance) {
  EXPECT_TRUE(within_band(1.09, 0.0, 1.0, 200));  // bias allowance 20/200
  EXPECT_FALSE(within_band(1.2, 0.0, 1.0, 200));
  EXPECT_TRUE(within_band(1.2, 0.05, 1.0, 200));
}

TEST(Experiments, SmallDiagonalizationWithShift) {
  // c' = 1/2 separates the alternating Gamma means from zero.
  const auto cfg = EnsembleConfig::with_ratio(20, Rational(9, 8), 2, 4000, 21);
  DiagonalizationOptions opt;
  opt.max_degree = 2;
  const MomentReport r = experiment_diagonalization(cfg, opt);
  EXPECT_TRUE(r.pass()) << report_text(r);
  for (const auto& s : r.statistics)
    if (s.key == "Tr Gamma_1(X1)") {
      EXPECT_NEAR(s.mean.real(), 0.5, 4 * s.se_mean + 0.05);
    }
}

TEST(Experiments, RawCovarianceSmall) {
  const auto cfg = EnsembleConfig::with_ratio(30, Rational(2), 1, 3000, 4);
  const MomentReport r = experiment_raw_covariance(cfg, 2, 1);
  ASSERT_EQ(r.covariance.size(), 1u);
  EXPECT_EQ(r.covariance[0].predicted, 12.0);
  EXPECT_TRUE(r.pass()) << report_text(r);
  EXPECT_THROW(experiment_raw_covariance(cfg, 7, 7), std::invalid_argument);
}

TEST(Experiments, ConvergenceOfTheBias) {
  const MomentReport r = experiment_convergence(Rational(1), {8, 16, 32}, 10000, 3, 3);
  EXPECT_TRUE(r.pass()) << report_text(r);
}

TEST(Report, Reproducible) {
  const auto cfg = EnsembleConfig::with_ratio(10, Rational(1), 2, 200, 77);
  DiagonalizationOptions opt;
  opt.max_degree = 2;
  auto a = report_to_json(experiment_diagonalization(cfg, opt));
  auto b = report_to_json(experiment_diagonalization(cfg, opt));
  a.erase("elapsed_s");
  b.erase("elapsed_s");
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_csv(experiment_raw_covariance(cfg, 1, 1)).rfind("key_a,key_b,", 0), 0u);
}
