#include "logbehave/exactnum.hpp"

#include <map>
#include <mutex>

#include "logbehave/errors.hpp"

namespace logbehave {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_div_ui(const BigInt& a, unsigned long d) {
  BigInt q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), d);
  return q;
}

BigInt ceil_div_ui(const BigInt& a, unsigned long d) {
  BigInt q;
  mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), d);
  return q;
}

BigInt shl(const BigInt& a, unsigned long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), bits);
  return r;
}

BigInt floor_shr(const BigInt& a, unsigned long bits) {
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), bits);
  return r;
}

BigInt ceil_shr(const BigInt& a, unsigned long bits) {
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), bits);
  return r;
}

BigInt pow2(unsigned long bits) { return shl(BigInt(1), bits); }

// Integer interval in units of 2^-W.
struct Fixed {
  BigInt lo;
  BigInt hi;
};

// Enclosure of atanh(p/q) * 2^W for 0 <= p/q <= 1/3, from the odd power
// series. Lower and upper partial sums are rounded in opposite directions
// and the upper one carries the geometric tail bound
//   sum_{i>=j} s^(2i+1)/(2i+1) <= s^(2j+1) / ((2j+1)(1 - s^2)).
Fixed atanh_fixed(const BigInt& p, const BigInt& q, unsigned long w) {
  if (sgn(p) == 0) return {0, 0};
  const BigInt one = pow2(w);
  const BigInt s_lo = floor_div(shl(p, w), q);
  const BigInt s_hi = ceil_div(shl(p, w), q);
  const BigInt s2_lo = floor_shr(s_lo * s_lo, w);
  const BigInt s2_hi = ceil_shr(s_hi * s_hi, w);

  BigInt pw_lo = s_lo;
  BigInt pw_hi = s_hi;
  BigInt sum_lo = 0;
  BigInt sum_hi = 0;
  unsigned long j = 0;
  while (true) {
    const unsigned long d = 2 * j + 1;
    sum_lo += floor_div_ui(pw_lo, d);
    sum_hi += ceil_div_ui(pw_hi, d);
    ++j;
    pw_lo = floor_shr(pw_lo * s2_lo, w);
    pw_hi = ceil_shr(pw_hi * s2_hi, w);
    if (pw_hi <= 1) break;
  }
  const BigInt tail =
      ceil_div(pw_hi * one, BigInt(2 * j + 1) * (one - s2_hi));
  return {sum_lo, sum_hi + tail};
}

Fixed ln2_fixed(unsigned long w) {
  static std::mutex mu;
  static std::map<unsigned long, Fixed> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  Fixed a = atanh_fixed(1, 3, w);
  Fixed r{2 * a.lo, 2 * a.hi};
  cache.emplace(w, r);
  return r;
}

// ln(a/b) for a, b > 0, in units of 2^-W.
Fixed ln_fixed(const BigInt& a, const BigInt& b, unsigned long w) {
  long e = static_cast<long>(bit_length(a)) - static_cast<long>(bit_length(b));
  BigInt u;
  BigInt v;
  auto scale = [&](long ex) {
    u = a;
    v = b;
    if (ex >= 0) {
      v = shl(v, static_cast<unsigned long>(ex));
    } else {
      u = shl(u, static_cast<unsigned long>(-ex));
    }
  };
  // u/v = a / (b 2^e) lies in (1/2, 2); pull it into [1/sqrt2, sqrt2].
  scale(e);
  if (2 * u * u < v * v) {
    scale(--e);
  } else if (u * u > 2 * v * v) {
    scale(++e);
  }

  const Fixed l2 = ln2_fixed(w);
  Fixed r;
  if (e >= 0) {
    r.lo = l2.lo * e;
    r.hi = l2.hi * e;
  } else {
    r.lo = l2.hi * e;
    r.hi = l2.lo * e;
  }
  const BigInt diff = u - v;
  const Fixed at = atanh_fixed(abs(diff), u + v, w);
  if (sgn(diff) >= 0) {
    r.lo += 2 * at.lo;
    r.hi += 2 * at.hi;
  } else {
    r.lo -= 2 * at.hi;
    r.hi -= 2 * at.lo;
  }
  return r;
}

// atan(1/k) * 2^W from the alternating series; the first omitted term
// bounds the remainder on both sides.
Fixed atan_inv_fixed(unsigned long k, unsigned long w) {
  const BigInt one = pow2(w);
  const BigInt k2 = BigInt(k) * k;
  BigInt pw_lo = floor_div_ui(one, k);
  BigInt pw_hi = ceil_div_ui(one, k);
  BigInt sum_lo = 0;
  BigInt sum_hi = 0;
  for (unsigned long j = 0;; ++j) {
    const unsigned long d = 2 * j + 1;
    const BigInt t_lo = floor_div_ui(pw_lo, d);
    const BigInt t_hi = ceil_div_ui(pw_hi, d);
    if (j % 2 == 0) {
      sum_lo += t_lo;
      sum_hi += t_hi;
    } else {
      sum_lo -= t_hi;
      sum_hi -= t_lo;
    }
    pw_lo = floor_div(pw_lo, k2);
    pw_hi = ceil_div(pw_hi, k2);
    if (pw_hi <= 1) {
      const BigInt next = ceil_div_ui(pw_hi, d + 2);
      sum_lo -= next;
      sum_hi += next;
      break;
    }
  }
  return {sum_lo, sum_hi};
}

}  // namespace

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw ZeroDenominator("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& x, unsigned long k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

BigRat pow(const BigRat& x, unsigned long k) {
  BigRat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
  return r;  // powers of coprime parts stay coprime
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw DomainError("invalid integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRat parse_bigrat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_bigint(text));
  return make_rat(parse_bigint(text.substr(0, slash)),
                  parse_bigint(text.substr(slash + 1)));
}

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigRat Dyadic::to_rat() const {
  BigRat r(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(),
                 static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(),
                 static_cast<mp_bitcnt_t>(-exponent));
  }
  return r;
}

namespace {

// Brings both mantissas to the smaller exponent.
std::pair<BigInt, BigInt> align(const Dyadic& a, const Dyadic& b, long& ex) {
  ex = std::min(a.exponent, b.exponent);
  return {shl(a.mantissa, static_cast<unsigned long>(a.exponent - ex)),
          shl(b.mantissa, static_cast<unsigned long>(b.exponent - ex))};
}

}  // namespace

int compare(const Dyadic& a, const Dyadic& b) {
  long ex = 0;
  auto [x, y] = align(a, b, ex);
  return cmp(x, y);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  long ex = 0;
  auto [x, y] = align(a, b, ex);
  return {x + y, ex};
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  long ex = 0;
  auto [x, y] = align(a, b, ex);
  return {x - y, ex};
}

Dyadic operator*(const Dyadic& a, unsigned long k) {
  return {a.mantissa * k, a.exponent};
}

LogInterval log_enclosure(const BigRat& x, unsigned precision_bits) {
  if (sgn(x) <= 0) throw DomainError("logarithm of a nonpositive number");
  if (precision_bits == 0) throw DomainError("precision must be positive");
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  const long e_est =
      std::abs(static_cast<long>(bit_length(a)) -
               static_cast<long>(bit_length(b))) + 2;
  unsigned long w = precision_bits + 24 +
                    bit_length(BigInt(precision_bits)) +
                    bit_length(BigInt(e_est));
  // The tight enclosure must be narrower than 2^-(p+3) so that padding by
  // 2^-p keeps enclosures of increasing precision nested.
  while (true) {
    Fixed t = ln_fixed(a, b, w);
    const unsigned long slack = w - precision_bits;
    if (t.hi - t.lo <= pow2(slack - 3)) {
      const BigInt pad = pow2(slack);
      return LogInterval{{t.lo - pad, -static_cast<long>(w)},
                         {t.hi + pad, -static_cast<long>(w)},
                         precision_bits};
    }
    w += 32;
  }
}

PiEnclosure pi_enclosure(unsigned precision_bits) {
  if (precision_bits < 8) throw DomainError("pi precision must be >= 8 bits");
  static std::mutex mu;
  static std::map<unsigned, PiEnclosure> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(precision_bits); it != cache.end()) {
    return it->second;
  }
  unsigned long w = precision_bits + 16 + bit_length(BigInt(precision_bits));
  while (true) {
    // pi = 16 atan(1/5) - 4 atan(1/239)
    const Fixed a5 = atan_inv_fixed(5, w);
    const Fixed a239 = atan_inv_fixed(239, w);
    const BigInt lo = 16 * a5.lo - 4 * a239.hi;
    const BigInt hi = 16 * a5.hi - 4 * a239.lo;
    const unsigned long slack = w - precision_bits;
    if (hi - lo <= pow2(slack - 3)) {
      const BigInt pad = pow2(slack);
      const BigInt den = pow2(w);
      PiEnclosure r{make_rat(lo - pad, den), make_rat(hi + pad, den)};
      cache.emplace(precision_bits, r);
      return r;
    }
    w += 32;
  }
}

Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return Ordering::Greater;
    case Ordering::Greater:
      return Ordering::Less;
    default:
      return Ordering::Equal;
  }
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "Less";
    case Ordering::Greater:
      return "Greater";
    default:
      return "Equal";
  }
}

std::string DecisionPath::to_string() const {
  if (kind == Kind::Exact) return "exact";
  return "interval(" + std::to_string(bits) + ")";
}

namespace {

void check_bases(std::span<const PowerTerm> terms) {
  for (const auto& t : terms) {
    if (sgn(t.base) <= 0) {
      throw DomainError("power product with nonpositive base " +
                        to_string(t.base));
    }
  }
}

// Enclosure of sum(exponent * ln(base)); total width <= 2^(2 - rung).
std::pair<Dyadic, Dyadic> log_sum(std::span<const PowerTerm> terms,
                                  unsigned rung, std::size_t count_bits) {
  Dyadic lo{0, 0};
  Dyadic hi{0, 0};
  for (const auto& t : terms) {
    if (t.exponent == 0 || t.base == 1) continue;
    const unsigned bits = rung +
                          static_cast<unsigned>(bit_length(BigInt(t.exponent))) +
                          static_cast<unsigned>(count_bits);
    const LogInterval li = log_enclosure(BigRat(t.base), bits);
    lo = lo + li.lo * t.exponent;
    hi = hi + li.hi * t.exponent;
  }
  return {lo, hi};
}

BigInt product(std::span<const PowerTerm> terms) {
  BigInt r = 1;
  for (const auto& t : terms) r *= pow(t.base, t.exponent);
  return r;
}

}  // namespace

PowerComparison cmp_power_products(std::span<const PowerTerm> lhs,
                                   std::span<const PowerTerm> rhs,
                                   const PrecisionLadder& ladder) {
  check_bases(lhs);
  check_bases(rhs);
  const std::size_t count_bits = bit_length(BigInt(lhs.size() + rhs.size()));
  for (unsigned rung : ladder.rungs) {
    const auto [l_lo, l_hi] = log_sum(lhs, rung, count_bits);
    const auto [r_lo, r_hi] = log_sum(rhs, rung, count_bits);
    if (compare(l_hi, r_lo) < 0) {
      return {Ordering::Less, DecisionPath::interval(rung)};
    }
    if (compare(l_lo, r_hi) > 0) {
      return {Ordering::Greater, DecisionPath::interval(rung)};
    }
  }
  const int c = cmp(product(lhs), product(rhs));
  const Ordering o =
      c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
  return {o, DecisionPath::exact()};
}

}  // namespace logbehave
