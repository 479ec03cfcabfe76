#include "halfperm/rmt/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "halfperm/poly/families.hpp"

namespace halfperm {

namespace {

using Complex = std::complex<double>;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<double> coefficients(Family f, int n, double c) {
  return family_members(f, n + 1)[n].coefficients_at(c);
}

Complex trace_of_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace

TraceStatistic TraceStatistic::power(int n, int i) {
  if (n < 1 || i < 1) throw std::invalid_argument("power trace needs n >= 1 and matrix index >= 1");
  return {Kind::Power, {n}, {i}};
}

TraceStatistic TraceStatistic::gamma(int n, int i) {
  if (n < 1 || i < 1) throw std::invalid_argument("Gamma trace needs n >= 1 and matrix index >= 1");
  return {Kind::Gamma, {n}, {i}};
}

TraceStatistic TraceStatistic::pi(int n, int i) {
  if (n < 1 || i < 1) throw std::invalid_argument("Pi trace needs n >= 1 and matrix index >= 1");
  return {Kind::Pi, {n}, {i}};
}

TraceStatistic TraceStatistic::mixed(std::vector<int> m, std::vector<int> i) {
  const size_t k = m.size();
  if (k < 2 || i.size() != k) throw std::invalid_argument("mixed trace needs k >= 2 degrees and matching indices");
  for (size_t r = 0; r < k; ++r) {
    if (m[r] < 1 || i[r] < 1) throw std::invalid_argument("mixed trace degrees and indices must be positive");
    if (i[r] == i[(r + 1) % k]) throw std::invalid_argument("mixed trace indices must be cyclically alternating");
  }
  std::vector<std::pair<int, int>> word, best;
  for (size_t r = 0; r < k; ++r) word.emplace_back(m[r], i[r]);
  best = word;
  for (size_t s = 1; s < k; ++s) {
    std::rotate(word.begin(), word.begin() + 1, word.end());
    best = std::min(best, word);
  }
  TraceStatistic t{Kind::Mixed, {}, {}};
  for (auto [deg, idx] : best) {
    t.degrees.push_back(deg);
    t.matrices.push_back(idx);
  }
  return t;
}

int TraceStatistic::degree() const {
  int d = 0;
  for (int m : degrees) d += m;
  return d;
}

int TraceStatistic::symmetry() const {
  if (kind != Kind::Mixed) return 1;
  const size_t k = degrees.size();
  int count = 0;
  for (size_t l = 1; l <= k; ++l) {
    bool same = true;
    for (size_t r = 0; r < k; ++r)
      same &= degrees[r] == degrees[(r + l) % k] && matrices[r] == matrices[(r + l) % k];
    count += same;
  }
  return count;
}

std::string TraceStatistic::key() const {
  switch (kind) {
    case Kind::Power:
      return "Tr X" + std::to_string(matrices[0]) + "^" + std::to_string(degrees[0]);
    case Kind::Gamma:
      return "Tr Gamma_" + std::to_string(degrees[0]) + "(X" + std::to_string(matrices[0]) + ")";
    case Kind::Pi:
      return "Tr Pi_" + std::to_string(degrees[0]) + "(X" + std::to_string(matrices[0]) + ")";
    case Kind::Mixed:
      return "S[(" + join(degrees) + "),(" + join(matrices) + ")]";
  }
  return "";
}

std::vector<TraceStatistic> mixed_statistics(int p, int max_degree) {
  std::vector<TraceStatistic> out;
  for (int k = 2; k <= max_degree; ++k) {
    // Degrees: compositions with k parts; indices: alternating sequences over [p].
    std::vector<int> m(k, 1), idx(k, 1);
    std::function<void(int, int)> degrees_rec = [&](int r, int left) {
      if (r == k) {
        std::function<void(int)> idx_rec = [&](int s) {
          if (s == k) {
            if (idx[k - 1] == idx[0]) return;
            TraceStatistic t = TraceStatistic::mixed(m, idx);
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            return;
          }
          for (int v = 1; v <= p; ++v)
            if (s == 0 || v != idx[s - 1]) {
              idx[s] = v;
              idx_rec(s + 1);
            }
        };
        idx_rec(0);
        return;
      }
      for (int v = 1; v <= left - (k - r - 1); ++v) {
        m[r] = v;
        degrees_rec(r + 1, left - v);
      }
    };
    degrees_rec(0, max_degree);
  }
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("HALFPERM_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SampleTable sample_statistics(const EnsembleConfig& cfg, const std::vector<TraceStatistic>& stats, int threads) {
  cfg.validate();
  for (const auto& s : stats)
    for (int i : s.matrices)
      if (i > cfg.p) throw std::invalid_argument("statistic " + s.key() + " uses a matrix index above p");
  const double c = cfg.c_value();

  // Highest power kept as a matrix: traces use X^a X^b with a = ceil(n/2); mixed words need Pi_m(X).
  int top = 1;
  for (const auto& s : stats) {
    if (s.kind == TraceStatistic::Kind::Mixed)
      for (int m : s.degrees) top = std::max(top, m);
    else
      top = std::max(top, (s.degrees[0] + 1) / 2);
  }
  std::map<std::pair<TraceStatistic::Kind, int>, std::vector<double>> coeff;
  for (const auto& s : stats) {
    if (s.kind == TraceStatistic::Kind::Gamma) coeff[{s.kind, s.degrees[0]}] = coefficients(Family::Gamma, s.degrees[0], c);
    if (s.kind == TraceStatistic::Kind::Pi) coeff[{s.kind, s.degrees[0]}] = coefficients(Family::Pi, s.degrees[0], c);
    if (s.kind == TraceStatistic::Kind::Mixed)
      for (int m : s.degrees) coeff[{TraceStatistic::Kind::Pi, m}] = coefficients(Family::Pi, m, c);
  }

  SampleTable table{stats, Eigen::MatrixXcd(cfg.samples, stats.size()), 0};
  if (threads <= 0) threads = default_thread_count();
  threads = static_cast<int>(std::min<long>(threads, cfg.samples));
  std::vector<double> worst_imag(threads, 0.0);

  auto work = [&](int t) {
    for (long d = t; d < cfg.samples; d += threads) {
      std::vector<std::vector<Eigen::MatrixXcd>> pw(cfg.p);
      for (int i = 0; i < cfg.p; ++i) {
        std::mt19937_64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(i)));
        Eigen::MatrixXcd x = sample_wishart(cfg.M, cfg.N, rng);
        pw[i].push_back(Eigen::MatrixXcd::Identity(cfg.N, cfg.N));
        pw[i].push_back(x);
        for (int r = 2; r <= top; ++r) pw[i].push_back(pw[i][r - 1] * x);
      }
      std::map<std::pair<int, int>, Complex> traces;
      auto power_trace = [&](int i, int n) {
        auto it = traces.find({i, n});
        if (it != traces.end()) return it->second;
        Complex v = n == 0 ? Complex(cfg.N) : trace_of_product(pw[i][(n + 1) / 2], pw[i][n / 2]);
        traces[{i, n}] = v;
        return v;
      };
      for (size_t col = 0; col < stats.size(); ++col) {
        const auto& s = stats[col];
        Complex v = 0;
        if (s.kind == TraceStatistic::Kind::Mixed) {
          Eigen::MatrixXcd prod;
          for (size_t r = 0; r + 1 < s.degrees.size(); ++r) {
            const auto& cf = coeff[{TraceStatistic::Kind::Pi, s.degrees[r]}];
            Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(cfg.N, cfg.N);
            for (size_t k = 0; k < cf.size(); ++k) f += cf[k] * pw[s.matrices[r] - 1][k];
            prod = r == 0 ? f : Eigen::MatrixXcd(prod * f);
          }
          const auto& cf = coeff[{TraceStatistic::Kind::Pi, s.degrees.back()}];
          const int last = s.matrices.back() - 1;
          for (size_t k = 0; k < cf.size(); ++k)
            if (cf[k] != 0) v += cf[k] * trace_of_product(prod, pw[last][k]);
        } else {
          const int i = s.matrices[0] - 1, n = s.degrees[0];
          if (s.kind == TraceStatistic::Kind::Power) {
            v = power_trace(i, n);
          } else {
            const auto& cf = coeff[{s.kind, n}];
            for (size_t k = 0; k < cf.size(); ++k) v += cf[k] * power_trace(i, static_cast<int>(k));
          }
          worst_imag[t] = std::max(worst_imag[t], std::abs(v.imag()) / std::max(1.0, std::abs(v)));
        }
        table.values(d, static_cast<Eigen::Index>(col)) = v;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  table.max_imag_hermitian = *std::max_element(worst_imag.begin(), worst_imag.end());
  return table;
}

MeanEstimate estimate_mean(const SampleTable& t, int column) {
  const auto col = t.values.col(column);
  const double n = static_cast<double>(col.size());
  const Complex mean = col.mean();
  const double var = n > 1 ? (col.array() - mean).abs2().sum() / (n - 1) : 0.0;
  return {mean, std::sqrt(var / n)};
}

CovarianceEstimate estimate_covariance(const SampleTable& t, int a, int b) {
  const Eigen::VectorXcd da = t.values.col(a).array() - t.values.col(a).mean();
  const Eigen::VectorXcd db = t.values.col(b).array() - t.values.col(b).mean();
  const double n = static_cast<double>(da.size());
  auto mean_se = [&](const Eigen::VectorXcd& prod) {
    const Complex m = prod.mean();
    const double var = n > 1 ? (prod.array() - m).abs2().sum() / (n - 1) : 0.0;
    return std::make_pair(m, std::sqrt(var / n));
  };
  auto [k2, k2se] = mean_se(da.cwiseProduct(db));
  auto [ab, abse] = mean_se(da.cwiseProduct(db.conjugate()));
  return {k2, k2se, ab, abse};
}

std::pair<double, double> standardized_third_cumulant(const SampleTable& t, int column) {
  const Eigen::ArrayXd x = t.values.col(column).real().array();
  const double n = static_cast<double>(x.size());
  const Eigen::ArrayXd d = x - x.mean();
  const double var = d.square().mean();
  const double k3 = d.cube().mean();
  return {var > 0 ? k3 / std::pow(var, 1.5) : 0.0, std::sqrt(6.0 / n)};
}

}  // namespace halfperm
