#include "halfperm/rmt/ensemble.hpp"

#include <cmath>
#include <stdexcept>

namespace halfperm {

EnsembleConfig EnsembleConfig::with_ratio(int N, const Rational& c, int p, long samples, std::uint64_t seed) {
  if (c <= 0) throw std::invalid_argument("c must be positive");
  Rational cn = c * N;
  // Round half up.
  mpz_class m = cn.get_num() * 2 + cn.get_den();
  m /= cn.get_den() * 2;
  if (m < 1) m = 1;
  EnsembleConfig cfg{N, static_cast<int>(m.get_si()), p, samples, seed, c};
  cfg.validate();
  return cfg;
}

EnsembleConfig EnsembleConfig::with_rows(int N, int M, int p, long samples, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  EnsembleConfig cfg{N, M, p, samples, seed, Rational(M, N)};
  cfg.c.canonicalize();
  cfg.validate();
  return cfg;
}

void EnsembleConfig::validate() const {
  if (N < 1 || M < 1 || p < 1 || samples < 1) throw std::invalid_argument("N, M, p and samples must be at least 1");
  if (c <= 0) throw std::invalid_argument("c must be positive");
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  const auto dot = s.find('.');
  Rational r;
  if (dot == std::string::npos) {
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a number: " + s);
  } else {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("not a number: " + s);
    mpz_class num(digits, 10), den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    r = Rational(num, den);
  }
  r.canonicalize();
  return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t draw, std::uint64_t matrix) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s) ^ draw;
  std::uint64_t b = splitmix64(a) ^ matrix;
  return splitmix64(b);
}

Eigen::MatrixXcd sample_wishart(int M, int N, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5 / N));
  Eigen::MatrixXcd G(M, N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < M; ++i) G(i, j) = std::complex<double>(g(rng), g(rng));
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(N, N);
  X.selfadjointView<Eigen::Lower>().rankUpdate(G.adjoint());
  X.triangularView<Eigen::StrictlyUpper>() = X.adjoint();
  return X;
}

}  // namespace halfperm
