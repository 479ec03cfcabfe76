#include "halfperm/poly/poly_xc.hpp"

#include <sstream>

namespace halfperm {

PolyXC::PolyXC(std::vector<PolyC> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyXC PolyXC::x() { return PolyXC({PolyC(), PolyC(1)}); }

PolyXC PolyXC::constant(const PolyC& value) { return PolyXC({value}); }

void PolyXC::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyC PolyXC::operator[](int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[power];
}

PolyXC& PolyXC::operator+=(const PolyXC& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyXC& PolyXC::operator-=(const PolyXC& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyXC operator*(const PolyXC& a, const PolyXC& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyC> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyXC(std::move(out));
}

PolyXC operator*(const PolyC& s, const PolyXC& p) {
  std::vector<PolyC> out = p.coeffs_;
  for (auto& q : out) q = s * q;
  return PolyXC(std::move(out));
}

PolyXC PolyXC::times_x() const {
  if (is_zero()) return {};
  std::vector<PolyC> out;
  out.reserve(coeffs_.size() + 1);
  out.emplace_back();
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return PolyXC(std::move(out));
}

std::vector<double> PolyXC::coefficients_at(double c) const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(q.evaluate(c));
  return out;
}

namespace {
bool single_term(const PolyC& p) {
  int nonzero = 0;
  for (const auto& q : p.coeffs()) nonzero += (q != 0);
  return nonzero <= 1;
}
}  // namespace

std::string PolyXC::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const PolyC& q = coeffs_[i];
    if (q.is_zero()) continue;
    PolyC mag = q;
    bool neg = false;
    if (single_term(q) && q.coeffs().back() < 0) {
      mag = -q;
      neg = true;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = mag == PolyC(1);
    if (i == 0) {
      os << (single_term(mag) ? mag.to_string() : "(" + mag.to_string() + ")");
      continue;
    }
    if (!unit) os << (single_term(mag) ? mag.to_string() : "(" + mag.to_string() + ")") << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace halfperm
