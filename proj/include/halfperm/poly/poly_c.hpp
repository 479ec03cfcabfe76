#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

namespace halfperm {

using Rational = mpq_class;

// Polynomial in the formal parameter c with rational coefficients.
// Invariant: coeffs_.back() != 0 unless the polynomial is zero (then empty).
class PolyC {
 public:
  PolyC() = default;
  PolyC(long value);  // NOLINT: implicit so that Eigen can form Scalar(0), Scalar(1)
  explicit PolyC(Rational value);
  explicit PolyC(std::vector<Rational> coeffs);

  static PolyC c();
  static PolyC monomial(int power, const Rational& coef = 1);
  static PolyC from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](int power) const;

  PolyC& operator+=(const PolyC& o);
  PolyC& operator-=(const PolyC& o);
  PolyC& operator*=(const PolyC& o);
  friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
  friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
  friend PolyC operator*(const PolyC& a, const PolyC& b);
  PolyC operator-() const;
  friend bool operator==(const PolyC& a, const PolyC& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyC& a, const PolyC& b) { return !(a == b); }

  PolyC pow(int e) const;
  // Exact division by c; requires zero constant term.
  PolyC divided_by_c() const;
  // Division by a nonzero constant.
  PolyC divided_by(const Rational& r) const;

  Rational evaluate(const Rational& c) const;
  double evaluate(double c) const;

  // Ascending canonical rendering, e.g. "1 + 4*c + c^2".
  std::string to_string() const;
  // Coefficients as "p/q" strings, ascending.
  std::vector<std::string> to_rational_strings() const;
  static PolyC from_rational_strings(const std::vector<std::string>& s);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyC& p);

std::string rational_to_string(const Rational& r);

}  // namespace halfperm

namespace Eigen {
template <>
struct NumTraits<halfperm::PolyC> : GenericNumTraits<halfperm::PolyC> {
  using Real = halfperm::PolyC;
  using NonInteger = halfperm::PolyC;
  using Nested = halfperm::PolyC;
  using Literal = halfperm::PolyC;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
