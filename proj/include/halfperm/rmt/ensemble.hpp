#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "halfperm/poly/poly_c.hpp"

namespace halfperm {

// p independent N x N Wishart matrices X = G^* G, G of size M x N.
struct EnsembleConfig {
  int N = 200;
  int M = 200;
  int p = 2;
  long samples = 20000;
  std::uint64_t seed = 1;
  // Nominal first-order parameter; c' = M - c N.
  Rational c = 1;

  // M = round(c N).
  static EnsembleConfig with_ratio(int N, const Rational& c, int p, long samples, std::uint64_t seed);
  // c = M / N, so c' = 0.
  static EnsembleConfig with_rows(int N, int M, int p, long samples, std::uint64_t seed);

  Rational c_prime() const { return Rational(M) - c * N; }
  double c_value() const { return c.get_d(); }
  void validate() const;
};

// "1", "0.25", "3/2".
Rational parse_rational(const std::string& s);

std::uint64_t splitmix64(std::uint64_t& state);
// Independent stream seed for (draw, matrix).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t draw, std::uint64_t matrix);

// Entries of G have independent real and imaginary parts of variance 1/(2N).
Eigen::MatrixXcd sample_wishart(int M, int N, std::mt19937_64& rng);

}  // namespace halfperm
