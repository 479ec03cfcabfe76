#pragma once

#include <vector>

#include "halfperm/poly/poly_c.hpp"

namespace halfperm {

// Power series in z with PolyC coefficients, truncated modulo z^(order+1).
class SeriesZ {
 public:
  explicit SeriesZ(int order);
  SeriesZ(int order, std::vector<PolyC> coeffs);

  static SeriesZ constant(int order, const PolyC& value);
  static SeriesZ z(int order);

  int order() const { return order_; }
  const PolyC& operator[](int n) const { return coeffs_.at(n); }
  PolyC& operator[](int n) { return coeffs_.at(n); }
  const std::vector<PolyC>& coeffs() const { return coeffs_; }

  SeriesZ& operator+=(const SeriesZ& o);
  SeriesZ& operator-=(const SeriesZ& o);
  friend SeriesZ operator+(SeriesZ a, const SeriesZ& b) { return a += b; }
  friend SeriesZ operator-(SeriesZ a, const SeriesZ& b) { return a -= b; }
  friend SeriesZ operator*(const SeriesZ& a, const SeriesZ& b);
  friend SeriesZ operator*(const PolyC& s, const SeriesZ& a);
  friend SeriesZ operator/(const SeriesZ& a, const SeriesZ& b) { return a * b.inverse(); }
  friend bool operator==(const SeriesZ& a, const SeriesZ& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  // Requires a constant term that is a nonzero rational (a unit of Q[c]).
  SeriesZ inverse() const;
  SeriesZ pow(int e) const;
  SeriesZ divided_by_c() const;
  SeriesZ times_z() const;

 private:
  int order_;
  std::vector<PolyC> coeffs_;
};

// Moment series of the Marchenko-Pastur law, from Q = z(c + (1+c)Q + Q^2), P0 = 1 + Q.
SeriesZ series_P0(int order);
// P_k = ((P0 - 1)/c)^k P0.
SeriesZ series_P(int k, int order);
// G0 with coefficients sum_j C(m,j)^2 c^j.
SeriesZ series_G0(int order);
// G_n = ((P0 - 1)/c)^n G0.
SeriesZ series_G(int n, int order);

}  // namespace halfperm
