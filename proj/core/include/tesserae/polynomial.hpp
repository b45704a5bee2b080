#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tesserae/bigint.hpp"

namespace tesserae {

// Dense univariate polynomial, coefficients stored lowest degree first and
// kept free of trailing zeros.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial monomial(T coeff, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& lead() const { return coeffs_.back(); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  // This polynomial modulo z^n.
  Polynomial truncated(std::size_t n) const {
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size()));
    return Polynomial(std::move(c));
  }

  // Coefficients in reverse order, padded to the given degree.
  Polynomial reversed(std::size_t deg) const {
    std::vector<T> c(deg + 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size() && i <= deg; ++i) c[deg - i] = coeffs_[i];
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& p);

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Monic greatest common divisor (zero only if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

// Positive gcd of the coefficients (zero for the zero polynomial).
BigInt content(const IntPoly& p);

// Clears denominators and divides out the content, preserving sign.
IntPoly primitive_part(const RatPoly& p);

// Human-readable form such as "1 - 10z + 22z^2".
std::string to_string(const IntPoly& p, char var = 'z');

}  // namespace tesserae
