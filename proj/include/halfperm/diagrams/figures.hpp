#pragma once

#include <vector>

#include "halfperm/check.hpp"
#include "halfperm/poly/poly_c.hpp"

namespace halfperm {

// Printed decompositions, transcribed once.
struct FigureFixtures {
  // x^2 in the Gamma basis, coefficients of Gamma_2, Gamma_1, Gamma_0.
  std::vector<PolyC> x_squared_gamma;
  // x^2 and y in the Pi basis, coefficients from the top degree down.
  std::vector<PolyC> x_squared_pi;
  std::vector<PolyC> y_pi;
};

const FigureFixtures& figure_fixtures();

// Re-derives both figures by enumerating the pictured half-permutations.
std::vector<Check> check_figure_fixtures();

}  // namespace halfperm
