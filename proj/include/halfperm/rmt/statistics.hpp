#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "halfperm/rmt/ensemble.hpp"

namespace halfperm {

// Matrices are numbered 1..p.
struct TraceStatistic {
  enum class Kind { Power, Gamma, Pi, Mixed };
  Kind kind = Kind::Power;
  std::vector<int> degrees;
  std::vector<int> matrices;

  static TraceStatistic power(int n, int i);
  static TraceStatistic gamma(int n, int i);
  static TraceStatistic pi(int n, int i);
  // Tr(Pi_{m_1}(X_{i_1}) ... Pi_{m_k}(X_{i_k})), k >= 2, cyclically alternating; stored as the
  // lexicographically smallest rotation.
  static TraceStatistic mixed(std::vector<int> m, std::vector<int> i);

  int degree() const;
  // Number of rotations fixing a mixed word; 1 otherwise.
  int symmetry() const;
  std::string key() const;

  friend bool operator==(const TraceStatistic& a, const TraceStatistic& b) {
    return a.kind == b.kind && a.degrees == b.degrees && a.matrices == b.matrices;
  }
};

// All cyclic classes of alternating words over p matrices with k >= 2 and total degree <= max_degree.
std::vector<TraceStatistic> mixed_statistics(int p, int max_degree);

// One row per draw, one column per statistic.
struct SampleTable {
  std::vector<TraceStatistic> stats;
  Eigen::MatrixXcd values;
  double max_imag_hermitian = 0;  // largest |Im| over single-matrix traces, relative to |value|
};

// HALFPERM_THREADS if set, else hardware concurrency.
int default_thread_count();

// Draws are split across threads; row d depends only on (seed, d), so the table is thread-count independent.
SampleTable sample_statistics(const EnsembleConfig& cfg, const std::vector<TraceStatistic>& stats, int threads = 0);

struct MeanEstimate {
  std::complex<double> mean;
  double se = 0;
};
// kappa2: E[(A - EA)(B - EB)]; abs2: E[(A - EA) conj(B - EB)]; each with the standard
// error of the mean of the per-draw products.
struct CovarianceEstimate {
  std::complex<double> kappa2;
  double kappa2_se = 0;
  std::complex<double> abs2;
  double abs2_se = 0;
};

MeanEstimate estimate_mean(const SampleTable& t, int column);
CovarianceEstimate estimate_covariance(const SampleTable& t, int a, int b);
// Standardized third cumulant of a column and its large-sample standard error sqrt(6/n).
std::pair<double, double> standardized_third_cumulant(const SampleTable& t, int column);

}  // namespace halfperm
