#include "halfperm/diagrams/figures.hpp"

#include <map>

#include "halfperm/diagrams/colored.hpp"
#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/poly/poly_xc.hpp"
#include "halfperm/poly/transition_matrix.hpp"

namespace halfperm {

namespace {

Check equality(const std::string& identity, const std::string& instance, const PolyC& lhs, const PolyC& rhs) {
  return Check{identity, instance, lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()};
}

// sum_k coeffs[k] * basis[degree - k].
PolyXC combine(const std::vector<PolyC>& coeffs, const std::vector<PolyXC>& basis) {
  const int degree = static_cast<int>(coeffs.size()) - 1;
  PolyXC sum;
  for (int k = 0; k <= degree; ++k) sum = sum + coeffs[k] * basis[degree - k];
  return sum;
}

}  // namespace

const FigureFixtures& figure_fixtures() {
  static const FigureFixtures f{
      {PolyC(1), PolyC::from_ints({2, 2}), PolyC::from_ints({0, 1, 1})},
      {PolyC(1), PolyC::from_ints({1, 2}), PolyC::from_ints({0, 1, 1})},
      {PolyC(1), PolyC::c()},
  };
  return f;
}

std::vector<Check> check_figure_fixtures() {
  const FigureFixtures& f = figure_fixtures();
  std::vector<Check> out;
  const PolyXC x = PolyXC::x();

  // Fig. 4: the five half-permutations on [2] with k >= 1.
  auto two = enum_ncc(2, 2);
  auto one = enum_ncc(2, 1);
  out.push_back(Check{"fig4-count", "NCC(2)_2, NCC(2)_1", two.size() == 1 && one.size() == 4,
                      std::to_string(two.size()) + ", " + std::to_string(one.size())});
  out.push_back(equality("fig4-weight", "NCC(2)_2", weighted_count(two, Weight::ClosedBlocks), f.x_squared_gamma[0]));
  out.push_back(equality("fig4-weight", "NCC(2)_1", weighted_count(one, Weight::ClosedBlocks), f.x_squared_gamma[1]));
  auto qinv = invert_unitriangular(transition_matrix(Family::Gamma, 3));
  for (int k = 0; k <= 2; ++k)
    out.push_back(equality("fig4-inverse", "Gamma^-1 (2," + std::to_string(k) + ")", qinv(2, k),
                           f.x_squared_gamma[2 - k]));
  out.push_back(Check{"fig4-polynomial", "x^2 in Gamma basis",
                      x * x == combine(f.x_squared_gamma, family_members(Family::Gamma, 3)), ""});

  // Fig. 5: {X, X, Y}; each interval restricts to a linear half-permutation.
  auto pi_basis = family_members(Family::Pi, 3);
  for (int k = 0; k <= 2; ++k)
    out.push_back(equality("fig5-linear", "NCL(2)_" + std::to_string(k),
                           weighted_count(enum_ncl(2, k), Weight::ClosedBlocks), f.x_squared_pi[2 - k]));
  for (int k = 0; k <= 1; ++k)
    out.push_back(equality("fig5-linear", "NCL(1)_" + std::to_string(k),
                           weighted_count(enum_ncl(1, k), Weight::ClosedBlocks), f.y_pi[1 - k]));
  out.push_back(Check{"fig5-polynomial", "x^2 and y in Pi basis",
                      x * x == combine(f.x_squared_pi, pi_basis) && x == combine(f.y_pi, pi_basis), ""});

  const std::vector<int> lengths{2, 1};
  auto pictured = enum_colored_ncc(lengths, {0, 1});
  out.push_back(Check{"fig5-count", "{X,X,Y}", pictured.size() == 4, std::to_string(pictured.size())});
  std::map<std::pair<int, int>, PolyC> by_open;
  for (const auto& h : pictured) {
    auto key = std::make_pair(restrict_to_interval(h, lengths, 0).open_count(),
                              restrict_to_interval(h, lengths, 1).open_count());
    by_open[key] = by_open[key] + PolyC::monomial(h.closed_count());
  }
  for (int k1 = 1; k1 <= 2; ++k1) {
    PolyC expected = f.x_squared_pi[2 - k1] * f.y_pi[0];
    out.push_back(equality("fig5-weight", "open (" + std::to_string(k1) + ",1)", by_open[{k1, 1}], expected));
  }
  return out;
}

}  // namespace halfperm
