#pragma once

#include <json.hpp>

#include "halfperm/diagrams/annular.hpp"
#include "halfperm/diagrams/half_perm.hpp"

namespace halfperm {

// {n, cycles}; annular permutations add {outer, inner}; half-permutations add
// {open, designated, reference}. "open" lists one point per open block.
nlohmann::json to_json(const Perm& p);
nlohmann::json to_json(const AnnularPerm& a);
nlohmann::json to_json(const CircularHalfPerm& h);
nlohmann::json to_json(const LinearHalfPerm& h);

Perm perm_from_json(const nlohmann::json& j);
AnnularPerm annular_from_json(const nlohmann::json& j);
CircularHalfPerm circular_from_json(const nlohmann::json& j);
LinearHalfPerm linear_from_json(const nlohmann::json& j);

}  // namespace halfperm
