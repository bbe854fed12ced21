#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "logbehave/errors.hpp"
#include "logbehave/exactnum.hpp"
#include "oracles.hpp"

using namespace logbehave;

namespace {

BigRat rat(long p, long q) { return make_rat(p, q); }

Ordering exact_order(const std::vector<PowerTerm>& l, const std::vector<PowerTerm>& r) {
  BigInt a = 1, b = 1;
  for (const auto& t : l) a *= pow(t.base, t.exponent);
  for (const auto& t : r) b *= pow(t.base, t.exponent);
  return a < b ? Ordering::Less : (a == b ? Ordering::Equal : Ordering::Greater);
}

}  // namespace

TEST(Pow, SmallPowers) {
  EXPECT_EQ(pow(rat(3, 2), 2), rat(9, 4));
  EXPECT_EQ(pow(rat(7, 3), 0), BigRat(1));
  EXPECT_EQ(pow(BigRat(0), 0), BigRat(1));
  EXPECT_EQ(pow(BigInt(0), 0), BigInt(1));
  EXPECT_EQ(pow(BigRat(0), 3), BigRat(0));
  EXPECT_EQ(pow(rat(-2, 3), 3), rat(-8, 27));
}

TEST(Pow, RatioSquareMatchesSchoolbook) {
  const BigRat v = rat(2152, 169);
  const BigRat sq = pow(v, 2);
  EXPECT_EQ(sq.get_num().get_str(), oracle::schoolbook_mul("2152", "2152"));
  EXPECT_EQ(sq.get_den().get_str(), oracle::schoolbook_mul("169", "169"));
  EXPECT_EQ(sq, rat(4631104, 28561));
}

TEST(Pow, LargePowerMatchesSchoolbook) {
  std::string acc = "1";
  for (int i = 0; i < 40; ++i) acc = oracle::schoolbook_mul(acc, "137728");
  EXPECT_EQ(to_string(pow(BigInt(137728), 40)), acc);
}

TEST(Pow, ExponentsAdd) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const BigRat x = rat(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 999) + 1);
    const unsigned long a = rng() % 30, b = rng() % 30;
    EXPECT_EQ(pow(x, a + b), pow(x, a) * pow(x, b));
  }
}

TEST(Parse, RoundTrip) {
  EXPECT_EQ(parse_bigrat("2152/169"), rat(2152, 169));
  EXPECT_EQ(parse_bigrat("4/6"), rat(2, 3));
  EXPECT_EQ(to_string(rat(10, 5)), "2");
  EXPECT_EQ(to_string(rat(-3, 9)), "-1/3");
  EXPECT_EQ(parse_bigint("-00012"), BigInt(-12));
  EXPECT_THROW(parse_bigint("12a"), Error);
  EXPECT_THROW(parse_bigrat("1/0"), Error);
  EXPECT_THROW(parse_bigint(""), Error);
}

TEST(LogEnclosure, OneContainsZero) {
  for (unsigned p : {8u, 64u, 300u}) {
    const LogInterval e = log_enclosure(BigRat(1), p);
    EXPECT_TRUE(e.contains(0));
    EXPECT_LE(e.width(), BigRat(pow(BigInt(2), 2)) / pow(BigInt(2), p));
  }
}

TEST(LogEnclosure, SixteenAgainstExpTaylor) {
  for (unsigned p : {32u, 64u, 128u}) {
    const LogInterval e = log_enclosure(BigRat(16), p);
    const auto lo_exp = oracle::exp_bounds(e.lo.to_rat(), 80);
    const auto hi_exp = oracle::exp_bounds(e.hi.to_rat(), 80);
    EXPECT_LE(lo_exp.second, BigRat(16)) << "precision " << p;
    EXPECT_GE(hi_exp.first, BigRat(16)) << "precision " << p;
  }
  // 4 ln 2 = 2.772588722239781...
  const LogInterval e = log_enclosure(BigRat(16), 40);
  EXPECT_LT(e.lo.to_rat(), parse_bigrat("2772588722239782/1000000000000000"));
  EXPECT_GT(e.hi.to_rat(), parse_bigrat("2772588722239781/1000000000000000"));
}

TEST(LogEnclosure, RandomRationalsAgainstExpTaylor) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const BigRat x = rat(static_cast<long>(rng() % 100000) + 1, static_cast<long>(rng() % 1000) + 1);
    const LogInterval e = log_enclosure(x, 48);
    const auto lo_exp = oracle::exp_bounds(e.lo.to_rat(), 60);
    const auto hi_exp = oracle::exp_bounds(e.hi.to_rat(), 60);
    EXPECT_LE(lo_exp.second, x) << x.get_str();
    EXPECT_GE(hi_exp.first, x) << x.get_str();
  }
}

TEST(LogEnclosure, Additivity) {
  const unsigned p = 80;
  const LogInterval q = log_enclosure(rat(2152, 169), p);
  const LogInterval a = log_enclosure(BigRat(2152), p);
  const LogInterval b = log_enclosure(BigRat(169), p);
  // ln(a) - ln(b) lies in [a.lo - b.hi, a.hi - b.lo], which must meet q.
  EXPECT_LE(q.lo.to_rat(), a.hi.to_rat() - b.lo.to_rat());
  EXPECT_GE(q.hi.to_rat(), a.lo.to_rat() - b.hi.to_rat());
}

TEST(LogEnclosure, WidthBound) {
  for (unsigned p : {8u, 20u, 64u, 256u, 1024u}) {
    for (const BigRat& x : {rat(1, 3), rat(16, 1), rat(10816, 1), rat(1, 1000000), BigRat(pow(BigInt(7), 500))}) {
      const LogInterval e = log_enclosure(x, p);
      EXPECT_LE(compare(e.lo, e.hi), 0);
      EXPECT_LE(e.width() * pow(BigInt(2), p), BigRat(4)) << p << " " << x.get_str();
    }
  }
}

TEST(LogEnclosure, Nesting) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    BigRat x = rat(static_cast<long>(rng() % 1000000) + 1, static_cast<long>(rng() % 10000) + 1);
    if (t % 10 == 0) x = BigRat(pow(BigInt(static_cast<long>(rng() % 50) + 2), 200));
    const unsigned p = 8 + static_cast<unsigned>(rng() % 200);
    const LogInterval a = log_enclosure(x, p);
    const LogInterval b = log_enclosure(x, 2 * p);
    EXPECT_TRUE(b.within(a)) << x.get_str() << " at " << p;
  }
}

TEST(LogEnclosure, RejectsNonPositive) {
  EXPECT_THROW(log_enclosure(BigRat(0), 64), DomainError);
  EXPECT_THROW(log_enclosure(rat(-1, 2), 64), DomainError);
}

TEST(Pi, ClassicalBrackets) {
  for (unsigned p : {8u, 16u, 32u, 64u}) {
    const PiEnclosure e = pi_enclosure(p);
    EXPECT_LT(e.lo, e.hi);
    EXPECT_LT(rat(223, 71), e.hi);
    EXPECT_GT(rat(22, 7), e.lo);
  }
}

TEST(Pi, DecimalBracketsAtThirtyTwoBits) {
  const PiEnclosure e = pi_enclosure(32);
  EXPECT_GT(e.lo, parse_bigrat("314159265/100000000"));
  EXPECT_LT(e.hi, parse_bigrat("314159266/100000000"));
}

TEST(Pi, AgainstIndependentMachinSeries) {
  const auto [o_lo, o_hi] = oracle::machin_pi(120);
  ASSERT_LT(o_hi - o_lo, parse_bigrat("1/1000000000000000000000000000000"));
  for (unsigned p : {8u, 32u, 64u, 200u, 400u}) {
    const PiEnclosure e = pi_enclosure(p);
    EXPECT_LE(e.lo, o_hi) << p;
    EXPECT_GE(e.hi, o_lo) << p;
    EXPECT_LE((e.hi - e.lo) * pow(BigInt(2), p), BigRat(8)) << p;
  }
}

TEST(Pi, Nesting) {
  const PiEnclosure a = pi_enclosure(32);
  const PiEnclosure b = pi_enclosure(64);
  EXPECT_LE(a.lo, b.lo);
  EXPECT_LE(b.hi, a.hi);
  EXPECT_THROW(pi_enclosure(7), DomainError);
}

TEST(Pi, ConcurrentFirstUseAgrees) {
  std::vector<PiEnclosure> got(6);
  std::vector<std::thread> ts;
  for (int i = 0; i < 6; ++i) ts.emplace_back([&got, i] { got[i] = pi_enclosure(777); });
  for (auto& t : ts) t.join();
  for (const auto& g : got) {
    EXPECT_EQ(g.lo, got[0].lo);
    EXPECT_EQ(g.hi, got[0].hi);
  }
}

TEST(PowerProducts, SpecExamples) {
  const std::vector<PowerTerm> two3{{2, 3}}, eight{{8, 1}};
  EXPECT_EQ(cmp_power_products(two3, eight).order, Ordering::Equal);

  const std::vector<PowerTerm> lhs{{80, 6}}, rhs{{8, 6}, {896, 2}};
  EXPECT_EQ(pow(BigInt(80), 6), BigInt("262144000000"));
  EXPECT_EQ(pow(BigInt(8), 6) * pow(BigInt(896), 2), BigInt("210453397504"));
  EXPECT_EQ(cmp_power_products(lhs, rhs).order, Ordering::Greater);

  const std::vector<PowerTerm> same{{10, 100}};
  const auto r = cmp_power_products(same, same);
  EXPECT_EQ(r.order, Ordering::Equal);
  EXPECT_EQ(r.path, DecisionPath::exact());
}

TEST(PowerProducts, EmptyAndZeroExponents) {
  const std::vector<PowerTerm> none{}, ones{{5, 0}, {1, 9}};
  EXPECT_EQ(cmp_power_products(none, ones).order, Ordering::Equal);
  const std::vector<PowerTerm> two{{2, 1}};
  EXPECT_EQ(cmp_power_products(none, two).order, Ordering::Less);
}

TEST(PowerProducts, RejectsNonPositiveBase) {
  const std::vector<PowerTerm> bad{{0, 1}}, ok{{1, 1}}, neg{{-3, 2}};
  EXPECT_THROW(cmp_power_products(bad, ok), DomainError);
  EXPECT_THROW(cmp_power_products(ok, neg), DomainError);
}

TEST(PowerProducts, NearTiesFallBackToExact) {
  // 3^200 * 2 vs 3^200 * 2 + tiny difference through distinct factorizations.
  const std::vector<PowerTerm> a{{6, 300}}, b{{2, 300}, {3, 300}};
  EXPECT_EQ(cmp_power_products(a, b).order, Ordering::Equal);
  const BigInt big = pow(BigInt(10), 400);
  const std::vector<PowerTerm> c{{big + 1, 3}}, d{{big, 3}};
  const auto r = cmp_power_products(c, d);
  EXPECT_EQ(r.order, Ordering::Greater);
  EXPECT_EQ(r.path, DecisionPath::exact());
}

TEST(PowerProducts, DualPathAgreementAndAntisymmetry) {
  std::mt19937_64 rng(2024);
  int interval_hits = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<PowerTerm> l, r;
    const int nl = 1 + static_cast<int>(rng() % 3), nr = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nl; ++i) l.push_back({BigInt(static_cast<long>(rng() % 5000) + 1), rng() % 60});
    for (int i = 0; i < nr; ++i) r.push_back({BigInt(static_cast<long>(rng() % 5000) + 1), rng() % 60});
    if (t % 7 == 0) r = l;  // forced ties
    const auto fast = cmp_power_products(l, r);
    const auto exact = cmp_power_products(l, r, PrecisionLadder::exact_only());
    const auto swapped = cmp_power_products(r, l);
    EXPECT_EQ(exact.path, DecisionPath::exact());
    EXPECT_EQ(fast.order, exact.order);
    EXPECT_EQ(fast.order, exact_order(l, r));
    EXPECT_EQ(swapped.order, flip(fast.order));
    if (fast.path.kind == DecisionPath::Kind::Interval) ++interval_hits;
  }
  EXPECT_GT(interval_hits, 200);
}

TEST(PowerProducts, LadderCustomRungs) {
  const std::vector<PowerTerm> l{{10816, 48}}, r{{896, 30}, {137728, 24}};
  const auto a = cmp_power_products(l, r, PrecisionLadder{{16}});
  const auto b = cmp_power_products(l, r, PrecisionLadder{{16, 4096}});
  EXPECT_EQ(a.order, exact_order({{10816, 48}}, {{896, 30}, {137728, 24}}));
  EXPECT_EQ(a.order, b.order);
}

TEST(DecisionPathText, Format) {
  EXPECT_EQ(DecisionPath::exact().to_string(), "exact");
  EXPECT_EQ(DecisionPath::interval(64).to_string(), "interval(64)");
  EXPECT_EQ(to_string(Ordering::Greater), "Greater");
}
