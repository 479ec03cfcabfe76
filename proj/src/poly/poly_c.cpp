#include "halfperm/poly/poly_c.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace halfperm {

PolyC::PolyC(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

PolyC::PolyC(Rational value) {
  if (value != 0) coeffs_.push_back(std::move(value));
}

PolyC::PolyC(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& q : coeffs_) q.canonicalize();
  trim();
}

PolyC PolyC::c() { return monomial(1); }

PolyC PolyC::monomial(int power, const Rational& coef) {
  if (power < 0) throw std::invalid_argument("negative power of c");
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = coef;
  return PolyC(std::move(v));
}

PolyC PolyC::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long x : coeffs) v.emplace_back(x);
  return PolyC(std::move(v));
}

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool PolyC::is_integral() const {
  for (const auto& q : coeffs_)
    if (q.get_den() != 1) return false;
  return true;
}

Rational PolyC::operator[](int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

PolyC& PolyC::operator+=(const PolyC& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyC operator*(const PolyC& a, const PolyC& b) {
  if (a.is_zero() || b.is_zero()) return PolyC();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  PolyC r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

PolyC& PolyC::operator*=(const PolyC& o) { return *this = *this * o; }

PolyC PolyC::operator-() const {
  PolyC r = *this;
  for (auto& q : r.coeffs_) q = -q;
  return r;
}

PolyC PolyC::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  PolyC result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

PolyC PolyC::divided_by_c() const {
  if (is_zero()) return {};
  if (coeffs_[0] != 0) throw std::domain_error("PolyC not divisible by c: " + to_string());
  PolyC r;
  r.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
  return r;
}

PolyC PolyC::divided_by(const Rational& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  PolyC r = *this;
  for (auto& q : r.coeffs_) q /= d;
  return r;
}

Rational PolyC::evaluate(const Rational& c) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
  return acc;
}

double PolyC::evaluate(double c) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + it->get_d();
  return acc;
}

std::string rational_to_string(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string PolyC::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& q = coeffs_[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    bool neg = q < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mag_s = mag.get_str();
    if (i == 0) {
      os << mag_s;
      continue;
    }
    if (mag != 1) os << mag_s << "*";
    os << "c";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> PolyC::to_rational_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(rational_to_string(q));
  return out;
}

PolyC PolyC::from_rational_strings(const std::vector<std::string>& s) {
  std::vector<Rational> v;
  for (const auto& str : s) {
    Rational q;
    if (q.set_str(str, 10) != 0) throw std::invalid_argument("bad rational: " + str);
    v.push_back(q);
  }
  return PolyC(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const PolyC& p) { return os << p.to_string(); }

}  // namespace halfperm
