#include "halfperm/rmt/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "halfperm/diagrams/contractions.hpp"

namespace halfperm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Word word_of(const TraceStatistic& s) { return Word{s.degrees, s.matrices}; }

Word reversed(Word w) {
  std::reverse(w.lengths.begin(), w.lengths.end());
  std::reverse(w.colors.begin(), w.colors.end());
  return w;
}

int cap_for(int total) { return std::max(total, kDefaultEnumerationCap); }

CovarianceRow covariance_row(const SampleTable& t, int a, int b, bool conjugate, const PolyC& prediction,
                             double c, int N) {
  const CovarianceEstimate est = estimate_covariance(t, a, b);
  CovarianceRow row;
  row.key_a = t.stats[a].key();
  row.key_b = t.stats[b].key();
  row.estimator = conjugate ? "abs2" : "kappa2";
  row.estimate = conjugate ? est.abs2 : est.kappa2;
  row.se = conjugate ? est.abs2_se : est.kappa2_se;
  row.predicted_poly = prediction.to_string();
  row.predicted = prediction.evaluate(c);
  row.pass = std::abs(row.estimate - row.predicted) <= tolerance_band(row.se, row.predicted, N);
  return row;
}

StatisticRow statistic_row(const SampleTable& t, int column, std::optional<double> prediction, int N) {
  const MeanEstimate m = estimate_mean(t, column);
  StatisticRow row{t.stats[column].key(), m.mean, m.se, prediction, std::nullopt};
  if (prediction) row.pass = std::abs(m.mean - *prediction) <= tolerance_band(m.se, *prediction, N);
  return row;
}

Check sample_check(std::string identity, std::string instance, bool pass, std::string detail, double residual) {
  return Check{std::move(identity), std::move(instance), pass, std::move(detail), residual};
}

}  // namespace

double tolerance_band(double se, double limit, int N) {
  return kSigmaBand * se + (kBiasSlope * std::abs(limit) + kBiasSlope) / N;
}

bool within_band(double estimate, double se, double limit, int N) {
  return std::abs(estimate - limit) <= tolerance_band(se, limit, N);
}

PolyC predict_covariance(int m, int n, int cap) {
  if (m < 1 || n < 1) throw std::invalid_argument("predict_covariance: m and n must be positive");
  return weighted_count(enum_snc(m, n, cap), Weight::AllBlocks);
}

double predicted_mean(const TraceStatistic& s, double c, double c_prime) {
  const int n = s.degrees[0];
  switch (s.kind) {
    case TraceStatistic::Kind::Gamma:
      // E Tr Gamma_1(X) = M - cN exactly; the sign alternates from there.
      return (n % 2 == 1 ? 1.0 : -1.0) * c_prime + 0.0;
    case TraceStatistic::Kind::Pi:
      return n % 2 == 1 ? c_prime * std::pow(c, (n - 1) / 2) : 0.0;
    case TraceStatistic::Kind::Mixed:
      return 0.0;
    case TraceStatistic::Kind::Power:
      break;
  }
  throw std::invalid_argument("predicted_mean: power traces grow with N and have no finite limit");
}

bool MomentReport::pass() const {
  for (const auto& s : statistics)
    if (s.pass && !*s.pass) return false;
  for (const auto& r : covariance)
    if (!r.pass) return false;
  return all_pass(checks);
}

MomentReport experiment_diagonalization(const EnsembleConfig& cfg, const DiagonalizationOptions& opt) {
  const auto t0 = Clock::now();
  cfg.validate();
  const int D = opt.max_degree;
  if (D < 1 || 2 * D > kDefaultEnumerationCap) throw std::invalid_argument("max_degree must lie in [1, cap/2]");
  const double c = cfg.c_value();
  const double cp = cfg.c_prime().get_d();

  std::vector<TraceStatistic> stats;
  for (int i = 1; i <= cfg.p; ++i)
    for (int n = 1; n <= D; ++n) stats.push_back(TraceStatistic::gamma(n, i));
  const size_t gamma_end = stats.size();
  std::vector<TraceStatistic> mixed = opt.mixed;
  if (mixed.empty() && opt.all_mixed && cfg.p >= 2) mixed = mixed_statistics(cfg.p, D);
  for (const auto& s : mixed) {
    if (s.kind != TraceStatistic::Kind::Mixed) throw std::invalid_argument("mixed list holds a non-mixed statistic");
    stats.push_back(s);
  }
  const size_t mixed_end = stats.size();
  for (int n = 1; n <= D; ++n) stats.push_back(TraceStatistic::pi(n, 1));
  const size_t pi_end = stats.size();
  for (int n = 1; n <= D; ++n) stats.push_back(TraceStatistic::power(n, 1));

  const SampleTable t = sample_statistics(cfg, stats, opt.threads);
  MomentReport r;
  r.experiment = "diagonalize";
  r.config = cfg;

  for (size_t k = 0; k < stats.size(); ++k) {
    std::optional<double> prediction;
    if (k < pi_end) prediction = predicted_mean(stats[k], c, cp);
    r.statistics.push_back(statistic_row(t, static_cast<int>(k), prediction, cfg.N));
  }

  for (size_t a = 0; a < mixed_end; ++a)
    for (size_t b = a; b < mixed_end; ++b) {
      const auto& sa = stats[a];
      const auto& sb = stats[b];
      PolyC prediction;
      if (a < gamma_end && b < gamma_end)
        prediction = gamma_gamma_covariance(sa.degrees[0], sa.matrices[0], sb.degrees[0], sb.matrices[0],
                                            cap_for(sa.degree() + sb.degree()));
      else if (a < gamma_end)
        prediction = word_gamma_covariance(word_of(sb), sa.degrees[0], sa.matrices[0], cap_for(sa.degree() + sb.degree()));
      else
        prediction = spoke_weight(word_of(sa), word_of(sb), cap_for(sa.degree() + sb.degree()));
      r.covariance.push_back(covariance_row(t, static_cast<int>(a), static_cast<int>(b), false, prediction, c, cfg.N));
      if (a >= gamma_end) {
        const PolyC abs_prediction = spoke_weight(word_of(sa), reversed(word_of(sb)), cap_for(sa.degree() + sb.degree()));
        r.covariance.push_back(covariance_row(t, static_cast<int>(a), static_cast<int>(b), true, abs_prediction, c, cfg.N));
      }
    }
  for (size_t a = pi_end; a < stats.size(); ++a)
    for (size_t b = a; b < stats.size(); ++b) {
      const int m = stats[a].degrees[0], n = stats[b].degrees[0];
      r.covariance.push_back(covariance_row(t, static_cast<int>(a), static_cast<int>(b), false,
                                            predict_covariance(m, n, cap_for(m + n)), c, cfg.N));
    }

  // Finite-N sanity and Gaussianity.
  const MeanEstimate trace = estimate_mean(t, static_cast<int>(pi_end));
  r.checks.push_back(sample_check("finite-N mean", "E Tr X1 = M", std::abs(trace.mean - double(cfg.M)) <= 5 * trace.se,
                                  "mean " + std::to_string(trace.mean.real()) + " se " + std::to_string(trace.se),
                                  std::abs(trace.mean - double(cfg.M))));
  r.checks.push_back(sample_check("hermitian traces", "max relative |Im|", t.max_imag_hermitian < 1e-10, "",
                                  t.max_imag_hermitian));
  // Skewness decays like 1/N, so the spot check only runs at the scale where 5 SE covers it.
  if (D >= 2 && cfg.N >= kGaussianityMinN && cfg.samples >= kGaussianityMinSamples) {
    auto [k3, se] = standardized_third_cumulant(t, 1);
    r.checks.push_back(sample_check("gaussianity", "standardized third cumulant of Tr Gamma_2(X1)",
                                    std::abs(k3) <= 5 * se, "se " + std::to_string(se), std::abs(k3)));
  }
  for (size_t k = 0; k < gamma_end; ++k) {
    const CovarianceEstimate e = estimate_covariance(t, static_cast<int>(k), static_cast<int>(k));
    const double gap = std::abs(e.kappa2 - e.abs2) / std::max(1.0, std::abs(e.abs2));
    r.checks.push_back(sample_check("estimator consistency", stats[k].key(), gap < 1e-8, "", gap));
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

MomentReport experiment_raw_covariance(const EnsembleConfig& cfg, int m, int n, int threads) {
  const auto t0 = Clock::now();
  cfg.validate();
  if (m < 1 || n < 1) throw std::invalid_argument("raw covariance degrees must be positive");
  if (m + n > kDefaultEnumerationCap)
    throw std::invalid_argument("m + n exceeds the enumeration cap " + std::to_string(kDefaultEnumerationCap));
  std::vector<TraceStatistic> stats{TraceStatistic::power(m, 1)};
  if (n != m) stats.push_back(TraceStatistic::power(n, 1));
  const SampleTable t = sample_statistics(cfg, stats, threads);
  MomentReport r;
  r.experiment = "raw-cov";
  r.config = cfg;
  for (size_t k = 0; k < stats.size(); ++k) r.statistics.push_back(statistic_row(t, static_cast<int>(k), std::nullopt, cfg.N));
  r.covariance.push_back(covariance_row(t, 0, static_cast<int>(stats.size()) - 1, false, predict_covariance(m, n), cfg.c_value(), cfg.N));
  r.elapsed_s = seconds_since(t0);
  return r;
}

MomentReport experiment_convergence(const Rational& c, const std::vector<int>& sizes, long base_samples, int n,
                                    std::uint64_t seed, int threads) {
  const auto t0 = Clock::now();
  if (sizes.size() < 2) throw std::invalid_argument("convergence needs at least two sizes");
  MomentReport r;
  r.experiment = "convergence";
  std::vector<std::pair<double, double>> gaps;
  for (int N : sizes) {
    EnsembleConfig cfg = EnsembleConfig::with_ratio(N, c, 1, base_samples * N / sizes.front(), seed);
    const TraceStatistic s = TraceStatistic::gamma(n, 1);
    const SampleTable t = sample_statistics(cfg, {s}, threads);
    const double limit = predicted_mean(s, cfg.c_value(), cfg.c_prime().get_d());
    StatisticRow row = statistic_row(t, 0, limit, N);
    row.key = "N=" + std::to_string(N) + " " + row.key;
    row.pass.reset();
    gaps.emplace_back(std::abs(row.mean - limit), row.se_mean);
    r.statistics.push_back(row);
    r.config = cfg;
  }
  const double drop = gaps.front().first - gaps.back().first;
  const double se = std::hypot(gaps.front().second, gaps.back().second);
  r.checks.push_back(sample_check("convergence", "gap shrinks from N=" + std::to_string(sizes.front()) + " to N=" +
                                                     std::to_string(sizes.back()),
                                  drop > 2 * se, "drop " + std::to_string(drop) + " se " + std::to_string(se), drop));
  r.elapsed_s = seconds_since(t0);
  return r;
}

}  // namespace halfperm
