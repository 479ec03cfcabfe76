#include "halfperm/poly/golden.hpp"

#include <stdexcept>
#include <string>

namespace halfperm {

namespace {

using R = std::vector<PolyC>;
PolyC P(std::initializer_list<long> c) { return PolyC::from_ints(c); }

}  // namespace

std::vector<std::vector<PolyC>> golden_inverse_rows(Family f) {
  switch (f) {
    case Family::GammaTilde:
      return {R{P({1})},
              R{P({1, 1}), P({1})},
              R{P({1, 4, 1}), P({2, 2}), P({1})},
              R{P({1, 9, 9, 1}), P({3, 9, 3}), P({3, 3}), P({1})},
              R{P({1, 16, 36, 16, 1}), P({4, 24, 24, 4}), P({6, 16, 6}), P({4, 4}), P({1})}};
    case Family::Gamma:
      return {R{P({1})},
              R{P({0, 1}), P({1})},
              R{P({0, 1, 1}), P({2, 2}), P({1})},
              R{P({0, 1, 3, 1}), P({3, 9, 3}), P({3, 3}), P({1})},
              R{P({0, 1, 6, 6, 1}), P({4, 24, 24, 4}), P({6, 16, 6}), P({4, 4}), P({1})}};
    case Family::Pi:
      return {R{P({1})},
              R{P({0, 1}), P({1})},
              R{P({0, 1, 1}), P({1, 2}), P({1})},
              R{P({0, 1, 3, 1}), P({1, 5, 3}), P({2, 3}), P({1})},
              R{P({0, 1, 6, 6, 1}), P({1, 9, 14, 4}), P({3, 11, 6}), P({3, 4}), P({1})}};
  }
  throw std::invalid_argument("unknown family");
}

std::vector<PolyXC> golden_gamma_tilde() {
  return {PolyXC({P({1})}),
          PolyXC({P({-1, -1}), P({1})}),
          PolyXC({P({1, 0, 1}), P({-2, -2}), P({1})}),
          PolyXC({P({-1, 0, 0, -1}), P({3, 3, 3}), P({-3, -3}), P({1})})};
}

std::vector<Check> check_golden_inverse(Family f, int rows) {
  const auto golden = golden_inverse_rows(f);
  if (rows < 1 || rows > static_cast<int>(golden.size()))
    throw std::invalid_argument("golden rows available: 1.." + std::to_string(golden.size()));
  const TransitionMatrix inv = invert_unitriangular(transition_matrix(f, rows));
  std::vector<Check> out;
  for (int n = 0; n < rows; ++n)
    for (int k = 0; k <= n; ++k) {
      const bool pass = inv(n, k) == golden[n][k];
      out.push_back(Check{family_name(f) + "-inverse golden", "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                          pass, pass ? "" : inv(n, k).to_string() + " vs printed " + golden[n][k].to_string()});
    }
  return out;
}

std::vector<Check> check_golden_forward(int rows) {
  const auto golden = golden_gamma_tilde();
  if (rows < 1 || rows > static_cast<int>(golden.size()))
    throw std::invalid_argument("golden rows available: 1.." + std::to_string(golden.size()));
  std::vector<Check> out;
  for (int n = 0; n < rows; ++n) {
    const PolyXC computed = gamma_tilde(n);
    const bool pass = computed == golden[n];
    out.push_back(Check{"gamma-tilde golden", "n=" + std::to_string(n), pass,
                        pass ? "" : computed.to_string() + " vs printed " + golden[n].to_string()});
  }
  return out;
}

std::vector<Check> check_golden_tables() {
  std::vector<Check> out;
  for (Family f : {Family::GammaTilde, Family::Gamma, Family::Pi}) append(out, check_golden_inverse(f));
  append(out, check_golden_forward());
  return out;
}

}  // namespace halfperm
