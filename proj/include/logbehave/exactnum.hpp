#pragma once

// Exact integers and rationals (GMP-backed), rigorous enclosures of natural
// logarithms and of pi, and exact comparison of products of integer powers.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logbehave {

using BigInt = mpz_class;
// Always kept canonical: gcd(|num|, den) = 1, den >= 1.
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

BigInt pow(const BigInt& x, unsigned long k);
// Exact x^k. 0^0 is 1 so that empty products stay uniform.
BigRat pow(const BigRat& x, unsigned long k);

std::string to_string(const BigInt& x);
// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRat& x);
BigInt parse_bigint(std::string_view text);
BigRat parse_bigrat(std::string_view text);

std::size_t bit_length(const BigInt& x);

// m * 2^exponent
struct Dyadic {
  BigInt mantissa;
  long exponent = 0;

  BigRat to_rat() const;
  friend int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) == 0;
  }
};

Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, unsigned long k);

// Closed interval [lo, hi] guaranteed to contain ln(x).
struct LogInterval {
  Dyadic lo;
  Dyadic hi;
  unsigned precision_bits = 0;

  BigRat width() const { return hi.to_rat() - lo.to_rat(); }
  bool contains(const BigRat& v) const {
    return lo.to_rat() <= v && v <= hi.to_rat();
  }
  bool within(const LogInterval& outer) const {
    return compare(outer.lo, lo) <= 0 && compare(hi, outer.hi) <= 0;
  }
};

// Width is at most 2^(2 - precision_bits). Enclosures nest: for q > p the
// q-bit enclosure lies inside the p-bit one.
LogInterval log_enclosure(const BigRat& x, unsigned precision_bits);

struct PiEnclosure {
  BigRat lo;
  BigRat hi;
};

// Width at most 2^(3 - precision_bits); nested like log_enclosure. Cached
// per precision; safe under concurrent first use.
PiEnclosure pi_enclosure(unsigned precision_bits);

enum class Ordering { Less, Equal, Greater };

Ordering flip(Ordering o);
std::string to_string(Ordering o);

struct PowerTerm {
  BigInt base;
  unsigned long exponent = 0;
};

// Precision rungs tried in order before the exact fallback. An empty ladder
// forces the exact path.
struct PrecisionLadder {
  std::vector<unsigned> rungs{64, 256, 1024};

  static PrecisionLadder exact_only() { return PrecisionLadder{{}}; }
};

struct DecisionPath {
  enum class Kind { Interval, Exact };
  Kind kind = Kind::Exact;
  unsigned bits = 0;

  static DecisionPath exact() { return {Kind::Exact, 0}; }
  static DecisionPath interval(unsigned b) { return {Kind::Interval, b}; }
  std::string to_string() const;
  bool operator==(const DecisionPath&) const = default;
};

struct PowerComparison {
  Ordering order;
  DecisionPath path;
};

// Orders prod(lhs) against prod(rhs). Each rung sums exponent * ln(base)
// enclosures; when the two sums still overlap after the last rung the
// products are formed and compared exactly. The ordering never depends on
// which route decided.
PowerComparison cmp_power_products(std::span<const PowerTerm> lhs,
                                   std::span<const PowerTerm> rhs,
                                   const PrecisionLadder& ladder = {});

}  // namespace logbehave
