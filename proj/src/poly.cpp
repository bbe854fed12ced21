#include "logbehave/poly.hpp"

#include <algorithm>
#include <sstream>

#include "logbehave/errors.hpp"

namespace logbehave {

PolyZ::PolyZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void PolyZ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt PolyZ::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

BigRat PolyZ::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + BigRat(*it);
  }
  return acc;
}

BigInt PolyZ::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

PolyZ PolyZ::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(q));
  }
  return PolyZ(std::move(out));
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const PolyZ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "n";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PolyZ poly_shift(const PolyZ& p, const BigInt& shift) {
  const PolyZ linear(std::vector<BigInt>{shift, BigInt(1)});
  PolyZ q;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    q *= linear;
    q += PolyZ::constant(*it);
  }
  return q;
}

namespace {

// x^k * p
PolyZ shift_up(const PolyZ& p, std::size_t k) {
  std::vector<BigInt> c(k, BigInt(0));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return PolyZ(std::move(c));
}

// Remainder of lc(b)^m * a by b for a suitable m >= 0.
PolyZ pseudo_remainder(PolyZ a, const PolyZ& b) {
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const BigInt la = a.leading();
    const auto k = static_cast<std::size_t>(a.degree() - b.degree());
    a = a * lb - shift_up(b * la, k);
  }
  return a;
}

}  // namespace

PolyZ divide_exact(const PolyZ& p, const PolyZ& d) {
  if (d.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) {
    throw DomainError("polynomial " + d.to_string() + " does not divide " +
                      p.to_string());
  }
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - d.degree() + 1));
  PolyZ r = p;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    BigInt c;
    BigInt rem;
    mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                d.leading().get_mpz_t());
    if (sgn(rem) != 0) break;
    const auto k = static_cast<std::size_t>(r.degree() - d.degree());
    q[k] = c;
    r -= shift_up(d * c, k);
  }
  if (!r.is_zero()) {
    throw DomainError("polynomial " + d.to_string() + " does not divide " +
                      p.to_string());
  }
  return PolyZ(std::move(q));
}

PolyZ primitive_gcd(PolyZ a, PolyZ b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    PolyZ r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

BigInt cauchy_root_bound(const PolyZ& p) {
  if (p.degree() <= 0) return 1;
  const BigInt lead = abs(p.leading());
  BigInt m = 0;
  for (long i = 0; i < p.degree(); ++i) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), BigInt(abs(p.coeffs()[i])).get_mpz_t(),
               lead.get_mpz_t());
    m = std::max(m, q);
  }
  return m + 1;
}

RatFunc::RatFunc(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  reduce();
}

RatFunc RatFunc::constant(const BigRat& c) {
  return RatFunc(PolyZ::constant(c.get_num()), PolyZ::constant(c.get_den()));
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = PolyZ{1};
    return;
  }
  const PolyZ g = primitive_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  BigInt c = gcd(num_.content(), den_.content());
  if (sgn(den_.leading()) < 0) c = -c;
  if (c != 1) {
    auto divide = [&](const PolyZ& p) {
      std::vector<BigInt> out;
      for (const auto& x : p.coeffs()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        out.push_back(std::move(q));
      }
      return PolyZ(std::move(out));
    };
    num_ = divide(num_);
    den_ = divide(den_);
  }
}

BigRat RatFunc::operator()(const BigInt& n) const {
  const BigInt d = den_(n);
  if (sgn(d) == 0) {
    throw ZeroDenominator("pole of " + to_string() + " at n = " + n.get_str());
  }
  return make_rat(num_(n), d);
}

RatFunc RatFunc::shifted(const BigInt& shift) const {
  return RatFunc(poly_shift(num_, shift), poly_shift(den_, shift));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw ZeroDenominator("division by the zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string RatFunc::to_string() const {
  auto wrap = [](const PolyZ& p) {
    const std::string s = p.to_string();
    return p.degree() <= 0 ? s : "(" + s + ")";
  };
  if (den_ == PolyZ{1}) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace logbehave
