#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfperm/check.hpp"
#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/poly/poly_c.hpp"
#include "halfperm/rmt/ensemble.hpp"
#include "halfperm/rmt/statistics.hpp"

namespace halfperm {

// |estimate - limit| <= 3 SE + (10 |limit| + 10) / N.
inline constexpr double kSigmaBand = 3.0;
inline constexpr double kBiasSlope = 10.0;
double tolerance_band(double se, double limit, int N);
bool within_band(double estimate, double se, double limit, int N);

inline constexpr int kGaussianityMinN = 200;
inline constexpr long kGaussianityMinSamples = 10000;

// Limit of kappa2(Tr X^m, Tr X^n): |S_NC(m, n)|_c.
PolyC predict_covariance(int m, int n, int cap = kDefaultEnumerationCap);

// Limits with c' entering as a known constant.
double predicted_mean(const TraceStatistic& s, double c, double c_prime);

struct StatisticRow {
  std::string key;
  std::complex<double> mean;
  double se_mean = 0;
  std::optional<double> predicted_mean;
  std::optional<bool> pass;
};

// estimator: "kappa2" for E[(A - EA)(B - EB)], "abs2" for E[(A - EA) conj(B - EB)].
struct CovarianceRow {
  std::string key_a;
  std::string key_b;
  std::string estimator;
  std::complex<double> estimate;
  double se = 0;
  std::string predicted_poly;
  double predicted = 0;
  bool pass = false;
};

struct MomentReport {
  std::string experiment;
  EnsembleConfig config;
  std::vector<StatisticRow> statistics;
  std::vector<CovarianceRow> covariance;
  std::vector<Check> checks;
  double elapsed_s = 0;

  bool pass() const;
};

struct DiagonalizationOptions {
  int max_degree = 3;
  // Empty: every cyclic class of degree <= max_degree.
  std::vector<TraceStatistic> mixed;
  bool all_mixed = true;
  int threads = 0;
};

MomentReport experiment_diagonalization(const EnsembleConfig& cfg, const DiagonalizationOptions& opt);
MomentReport experiment_raw_covariance(const EnsembleConfig& cfg, int m, int n, int threads = 0);
// Mean of Tr Gamma_n(X) at c' = 0 for each N; samples scale with N. The check asks the gap to the
// limit to shrink from the smallest to the largest N by more than 2 combined standard errors.
MomentReport experiment_convergence(const Rational& c, const std::vector<int>& sizes, long base_samples, int n,
                                    std::uint64_t seed, int threads = 0);

}  // namespace halfperm
