#include "halfperm/diagrams/serialize.hpp"

#include <stdexcept>

namespace halfperm {

using nlohmann::json;

json to_json(const Perm& p) { return json{{"n", p.size()}, {"cycles", p.cycles()}}; }

json to_json(const AnnularPerm& a) {
  json j = to_json(a.perm());
  j["outer"] = a.outer_size();
  j["inner"] = a.inner_size();
  return j;
}

json to_json(const CircularHalfPerm& h) {
  json j = to_json(h.perm());
  j["open"] = h.open_initial_points();
  switch (h.designation()) {
    case Designation::None:
      j["designated"] = nullptr;
      j["reference"] = h.reference_block();
      break;
    case Designation::InPerm:
      j["designated"] = json{{"in", "perm"}, {"block", h.reference_block()}};
      break;
    case Designation::InComplement:
      j["designated"] = json{{"in", "complement"}, {"block", h.reference_block()}};
      break;
  }
  return j;
}

json to_json(const LinearHalfPerm& h) {
  json j = to_json(h.perm());
  std::vector<int> open;
  for (auto& b : h.open_blocks()) open.push_back(b.front());
  j["open"] = open;
  j["designated"] = nullptr;
  return j;
}

Perm perm_from_json(const json& j) {
  return Perm::from_cycles(j.at("n").get<int>(), j.at("cycles").get<std::vector<std::vector<int>>>());
}

AnnularPerm annular_from_json(const json& j) {
  return AnnularPerm(j.at("outer").get<int>(), j.at("inner").get<int>(), perm_from_json(j));
}

CircularHalfPerm circular_from_json(const json& j) {
  Perm pi = perm_from_json(j);
  const json& d = j.at("designated");
  if (d.is_null())
    return CircularHalfPerm::with_open_blocks(std::move(pi), j.at("reference").get<std::vector<int>>(),
                                              j.at("open").get<std::vector<int>>());
  const std::string where = d.at("in").get<std::string>();
  if (where != "perm" && where != "complement") throw std::invalid_argument("designated.in must be perm or complement");
  return CircularHalfPerm::with_designated(std::move(pi), where == "perm" ? Designation::InPerm : Designation::InComplement,
                                           d.at("block").get<std::vector<int>>());
}

LinearHalfPerm linear_from_json(const json& j) {
  return LinearHalfPerm(perm_from_json(j), j.at("open").get<std::vector<int>>());
}

}  // namespace halfperm
