#include "halfperm/poly/series.hpp"

#include <stdexcept>

namespace halfperm {

SeriesZ::SeriesZ(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(order + 1);
}

SeriesZ::SeriesZ(int order, std::vector<PolyC> coeffs) : SeriesZ(order) {
  for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) coeffs_[i] = std::move(coeffs[i]);
}

SeriesZ SeriesZ::constant(int order, const PolyC& value) {
  SeriesZ s(order);
  s.coeffs_[0] = value;
  return s;
}

SeriesZ SeriesZ::z(int order) {
  SeriesZ s(order);
  if (order >= 1) s.coeffs_[1] = PolyC(1);
  return s;
}

SeriesZ& SeriesZ::operator+=(const SeriesZ& o) {
  if (o.order_ != order_) throw std::invalid_argument("series order mismatch");
  for (int i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SeriesZ& SeriesZ::operator-=(const SeriesZ& o) {
  if (o.order_ != order_) throw std::invalid_argument("series order mismatch");
  for (int i = 0; i <= order_; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series order mismatch");
  SeriesZ r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

SeriesZ operator*(const PolyC& s, const SeriesZ& a) {
  SeriesZ r(a.order_);
  for (int i = 0; i <= a.order_; ++i) r.coeffs_[i] = s * a.coeffs_[i];
  return r;
}

SeriesZ SeriesZ::inverse() const {
  const PolyC& a0 = coeffs_[0];
  if (a0.degree() != 0) throw std::domain_error("series constant term is not a unit");
  Rational inv0 = 1 / a0[0];
  SeriesZ b(order_);
  b.coeffs_[0] = PolyC(inv0);
  for (int n = 1; n <= order_; ++n) {
    PolyC acc;
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * b.coeffs_[n - k];
    b.coeffs_[n] = -acc.divided_by(a0[0]);
  }
  return b;
}

SeriesZ SeriesZ::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  SeriesZ result = constant(order_, PolyC(1)), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SeriesZ SeriesZ::divided_by_c() const {
  SeriesZ r(order_);
  for (int i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i].divided_by_c();
  return r;
}

SeriesZ SeriesZ::times_z() const {
  SeriesZ r(order_);
  for (int i = 0; i < order_; ++i) r.coeffs_[i + 1] = coeffs_[i];
  return r;
}

SeriesZ series_P0(int order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  const PolyC c = PolyC::c();
  const SeriesZ c_const = SeriesZ::constant(order, c);
  const PolyC one_plus_c = PolyC(1) + c;
  // Each pass fixes at least one more coefficient; the branch has Q(0) = 0.
  SeriesZ q(order);
  for (int pass = 0; pass <= order; ++pass) {
    SeriesZ next = (c_const + one_plus_c * q + q * q).times_z();
    if (next == q) break;
    q = std::move(next);
  }
  return SeriesZ::constant(order, PolyC(1)) + q;
}

SeriesZ series_P(int k, int order) {
  if (k < 0) throw std::invalid_argument("negative index");
  SeriesZ p0 = series_P0(order);
  SeriesZ step = (p0 - SeriesZ::constant(order, PolyC(1))).divided_by_c();
  return step.pow(k) * p0;
}

SeriesZ series_G0(int order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  SeriesZ g(order);
  for (int m = 0; m <= order; ++m) {
    std::vector<Rational> v(m + 1);
    for (int j = 0; j <= m; ++j) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), m, j);
      v[j] = Rational(b * b);
    }
    g[m] = PolyC(std::move(v));
  }
  return g;
}

SeriesZ series_G(int n, int order) {
  if (n < 0) throw std::invalid_argument("negative index");
  SeriesZ p0 = series_P0(order);
  SeriesZ step = (p0 - SeriesZ::constant(order, PolyC(1))).divided_by_c();
  return step.pow(n) * series_G0(order);
}

}  // namespace halfperm
