#include "logbehave/bound_parser.hpp"

#include <cctype>

#include "logbehave/errors.hpp"

namespace logbehave {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!eat('^')) return base;
    skip_ws();
    bool negative = false;
    if (eat('-')) negative = true;
    skip_ws();
    const BigInt e = integer();
    if (e > 64) fail("exponent too large");
    RatFunc r = RatFunc::constant(BigRat(1));
    for (long i = 0; i < e.get_si(); ++i) r *= base;
    if (negative) {
      if (r.is_zero()) fail("zero raised to a negative power");
      r = RatFunc::constant(BigRat(1)) / r;
    }
    return r;
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }

  RatFunc primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'n') {
      ++pos_;
      return RatFunc(PolyZ::identity());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc(PolyZ::constant(integer()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_bound(std::string_view text) { return Parser(text).parse(); }

}  // namespace logbehave
