#pragma once

// Univariate integer polynomials in n and their quotients.

#include <initializer_list>
#include <string>
#include <vector>

#include "logbehave/exactnum.hpp"

namespace logbehave {

// Coefficients in ascending degree; no trailing zeros, zero is empty.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<BigInt> coeffs);
  PolyZ(std::initializer_list<long> coeffs);

  static PolyZ constant(const BigInt& c) { return PolyZ(std::vector{c}); }
  // The monomial n.
  static PolyZ identity() { return PolyZ{0, 1}; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  // Horner evaluation.
  BigInt operator()(const BigInt& n) const;
  BigRat operator()(const BigRat& x) const;

  // gcd of the coefficients, 0 for the zero polynomial.
  BigInt content() const;
  PolyZ primitive_part() const;

  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  PolyZ& operator*=(const PolyZ& o);
  PolyZ& operator*=(const BigInt& c);

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(PolyZ a, const PolyZ& b) { return a *= b; }
  friend PolyZ operator*(PolyZ a, const BigInt& c) { return a *= c; }
  friend PolyZ operator-(PolyZ a) { return a *= BigInt(-1); }
  friend bool operator==(const PolyZ& a, const PolyZ& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// q(x) = p(x + shift), by binomial expansion.
PolyZ poly_shift(const PolyZ& p, const BigInt& shift);

// Exact division over Z; throws DomainError when d does not divide p.
PolyZ divide_exact(const PolyZ& p, const PolyZ& d);

// Primitive gcd with positive leading coefficient (content dropped).
PolyZ primitive_gcd(PolyZ a, PolyZ b);

// Cauchy bound: every real root r satisfies |r| < 1 + max |a_i / a_d|.
// Returned rounded up to an integer.
BigInt cauchy_root_bound(const PolyZ& p);

// num / den kept reduced: no common polynomial factor, no common integer
// content, positive leading coefficient in den.
class RatFunc {
 public:
  RatFunc() : num_(), den_(PolyZ{1}) {}
  RatFunc(PolyZ num, PolyZ den);
  RatFunc(const PolyZ& p) : RatFunc(p, PolyZ{1}) {}  // NOLINT

  static RatFunc constant(const BigRat& c);

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws ZeroDenominator at a pole.
  BigRat operator()(const BigInt& n) const;
  // r(n + shift)
  RatFunc shifted(const BigInt& shift) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void reduce();
  PolyZ num_;
  PolyZ den_;
};

}  // namespace logbehave
