#pragma once

#include <string>
#include <vector>

#include "halfperm/poly/poly_c.hpp"

namespace halfperm {

// Polynomial in x with PolyC coefficients. Invariant: no trailing zero coefficient.
class PolyXC {
 public:
  PolyXC() = default;
  explicit PolyXC(std::vector<PolyC> coeffs);

  static PolyXC x();
  static PolyXC constant(const PolyC& value);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == PolyC(1); }
  const std::vector<PolyC>& coeffs() const { return coeffs_; }
  PolyC operator[](int power) const;

  PolyXC& operator+=(const PolyXC& o);
  PolyXC& operator-=(const PolyXC& o);
  friend PolyXC operator+(PolyXC a, const PolyXC& b) { return a += b; }
  friend PolyXC operator-(PolyXC a, const PolyXC& b) { return a -= b; }
  friend PolyXC operator*(const PolyXC& a, const PolyXC& b);
  friend PolyXC operator*(const PolyC& s, const PolyXC& p);
  friend bool operator==(const PolyXC& a, const PolyXC& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyXC& a, const PolyXC& b) { return !(a == b); }

  PolyXC times_x() const;

  // Coefficients in x with c substituted numerically.
  std::vector<double> coefficients_at(double c) const;

  // Descending rendering, e.g. "x^2 - (2 + 2*c)*x + (1 + c^2)".
  std::string to_string() const;

 private:
  void trim();
  std::vector<PolyC> coeffs_;
};

}  // namespace halfperm
