#include "halfperm/poly/families.hpp"

#include <stdexcept>

namespace halfperm {

namespace {

PolyXC lin(const PolyC& a0) { return PolyXC({a0, PolyC(1)}); }

// T_{n+1} = (x - a) T_n - b T_{n-1}, continuing from the given seeds.
std::vector<PolyXC> extend(std::vector<PolyXC> seq, int count, const PolyC& a, const PolyC& b) {
  while (static_cast<int>(seq.size()) < count) {
    size_t n = seq.size() - 1;
    seq.push_back(lin(-a) * seq[n] - PolyXC::constant(b) * seq[n - 1]);
  }
  seq.resize(count);
  return seq;
}

std::vector<PolyXC> gamma_tilde_seq(int count) {
  const PolyC c = PolyC::c();
  const PolyC one_c = PolyC(1) + c;
  std::vector<PolyXC> seq{PolyXC::constant(PolyC(1)), lin(-one_c)};
  if (count > 2) seq.push_back(lin(-one_c) * seq[1] - PolyXC::constant(2L * c));
  return extend(std::move(seq), count, one_c, c);
}

std::vector<PolyXC> pi_seq(int count) {
  const PolyC c = PolyC::c();
  const PolyC one_c = PolyC(1) + c;
  std::vector<PolyXC> seq{
      PolyXC::constant(PolyC(1)),
      lin(-c),
      PolyXC({c * c, -(PolyC(1) + 2L * c), PolyC(1)}),
      PolyXC({-c.pow(3), PolyC::from_ints({1, 2, 3}), -(PolyC(2) + 3L * c), PolyC(1)}),
  };
  return extend(std::move(seq), count, one_c, c);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::GammaTilde: return "gamma-tilde";
    case Family::Gamma: return "gamma";
    case Family::Pi: return "pi";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "gamma-tilde") return Family::GammaTilde;
  if (name == "gamma") return Family::Gamma;
  if (name == "pi") return Family::Pi;
  throw std::invalid_argument("unknown family: " + name);
}

PolyXC chebyshev_C(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<PolyXC> seq{PolyXC::constant(PolyC(1)), PolyXC::x(), PolyXC({PolyC(-2), PolyC(), PolyC(1)})};
  return extend(std::move(seq), n + 1, PolyC(), PolyC(1))[n];
}

PolyXC chebyshev_S(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<PolyXC> seq{PolyXC::constant(PolyC(1)), PolyXC::x()};
  return extend(std::move(seq), n + 1, PolyC(), PolyC(1))[n];
}

PolyC d_constant(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (n == 0) return PolyC(-1);
  if (n == 1) return PolyC(1);
  PolyC cm1 = PolyC::c() - PolyC(1);
  return n % 2 == 0 ? cm1 : -cm1;
}

std::vector<PolyXC> family_members(Family f, int count) {
  if (count < 0) throw std::invalid_argument("negative count");
  if (count == 0) return {};
  switch (f) {
    case Family::GammaTilde: return gamma_tilde_seq(count);
    case Family::Gamma: {
      auto seq = gamma_tilde_seq(count);
      for (int n = 1; n < count; ++n) seq[n] += PolyXC::constant(d_constant(n));
      return seq;
    }
    case Family::Pi: return pi_seq(count);
  }
  throw std::invalid_argument("unknown family");
}

PolyXC gamma_tilde(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  return family_members(Family::GammaTilde, n + 1)[n];
}

PolyXC gamma(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  return family_members(Family::Gamma, n + 1)[n];
}

PolyXC pi_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  return family_members(Family::Pi, n + 1)[n];
}

}  // namespace halfperm
