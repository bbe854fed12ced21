#include <gtest/gtest.h>

#include <random>

#include "logbehave/errors.hpp"
#include "logbehave/logbehavior.hpp"
#include "oracles.hpp"

using namespace logbehave;

namespace {

// a_{n+1} = k a_n
Order2Recurrence geometric(const std::string& name, long k) {
  return {name, PolyZ{1}, PolyZ{k}, PolyZ{}, 1, k, 1};
}

// A sequence whose first terms are supplied directly; later terms are 0.
Sequence from_terms(std::vector<BigInt> terms) {
  Order2Recurrence rec{"given", PolyZ{1}, PolyZ{}, PolyZ{}, terms.at(0), terms.at(1), 1};
  return Sequence(rec, SequenceStore{"given", std::move(terms)});
}

void expect_all(const PropertyReport& r, Verdict v) {
  for (const auto& x : r.results) EXPECT_EQ(x.verdict, v) << r.property << " at " << x.n;
}

// [floor(a^{1/k} 10^D), that + 1] / 10^D
std::pair<BigRat, BigRat> root_bracket(const BigInt& a, unsigned long k, unsigned long D) {
  const BigInt scale = pow(BigInt(10), D);
  BigInt r;
  const BigInt scaled = a * pow(scale, k);
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k);
  return {BigRat(r, scale), BigRat(r + 1, scale)};
}

}  // namespace

TEST(LogConcave, ClfFailsEverywhere) {
  Sequence s(clf());
  const auto r = check_log_concave(s, 1, 50, false);
  expect_all(r, Verdict::Fails);
  EXPECT_EQ(r.first_failure, 1);
  oracle::TermOracle o;
  for (long n = 1; n <= 50; ++n) EXPECT_LT(o.clf(n) * o.clf(n), o.clf(n - 1) * o.clf(n + 1));
}

TEST(LogConcave, FlfHoldsStrictly) {
  Sequence s(flf());
  const auto r = check_log_concave(s, 2, 50, true);
  EXPECT_TRUE(r.holds_strictly());
  EXPECT_FALSE(r.first_failure.has_value());
}

TEST(LogConcave, ConstantSequenceEquality) {
  Sequence s(geometric("one", 1));
  const auto loose = check_log_concave(s, 1, 30, false);
  EXPECT_TRUE(loose.holds());
  expect_all(loose, Verdict::Holds);
  const auto strict = check_log_concave(s, 1, 30, true);
  EXPECT_FALSE(strict.holds());
  EXPECT_EQ(strict.first_failure, 1);
}

TEST(LogConvex, Examples) {
  Sequence c(clf()), v(flf()), g(geometric("two", 2));
  EXPECT_TRUE(check_log_convex(c, 1, 200, true).holds_strictly());
  expect_all(check_log_convex(v, 2, 50, false), Verdict::Fails);
  EXPECT_TRUE(check_log_convex(g, 1, 40, false).holds());
  EXPECT_FALSE(check_log_convex(g, 1, 40, true).holds());
}

TEST(RatioMonotone, Examples) {
  Sequence c(clf()), v(flf()), one(geometric("one", 1));
  EXPECT_TRUE(check_ratio_monotone(c, 1, 200, Direction::Increasing).holds());
  EXPECT_TRUE(check_ratio_monotone(v, 2, 50, Direction::Decreasing).holds());
  EXPECT_FALSE(check_ratio_monotone(v, 2, 50, Direction::Increasing).holds());
  EXPECT_TRUE(check_ratio_monotone(one, 1, 20, Direction::Increasing).holds());
  EXPECT_TRUE(check_ratio_monotone(one, 1, 20, Direction::Decreasing).holds());
  EXPECT_FALSE(check_ratio_monotone(one, 1, 20, Direction::Decreasing, true).holds());
}

TEST(RatioMonotone, MatchesLogConvexityIndexwise) {
  Sequence c(clf()), v(flf());
  for (Sequence* s : {&c, &v}) {
    for (bool strict : {false, true}) {
      const auto inc = check_ratio_monotone(*s, 2, 120, Direction::Increasing, strict);
      const auto cvx = check_log_convex(*s, 2, 120, strict);
      const auto dec = check_ratio_monotone(*s, 2, 120, Direction::Decreasing, strict);
      const auto ccv = check_log_concave(*s, 2, 120, strict);
      for (std::size_t i = 0; i < inc.results.size(); ++i) {
        EXPECT_EQ(inc.results[i].verdict, cvx.results[i].verdict);
        EXPECT_EQ(dec.results[i].verdict, ccv.results[i].verdict);
      }
    }
  }
}

TEST(RatioMonotone, ScalingLeavesVerdictsUnchanged) {
  oracle::TermOracle o;
  std::vector<BigInt> base, scaled;
  for (long n = 0; n <= 40; ++n) {
    base.push_back(o.flf(n));
    scaled.push_back(o.flf(n) * 7);
  }
  Sequence a = from_terms(base), b = from_terms(scaled);
  const auto ra = check_log_concave(a, 1, 39, true), rb = check_log_concave(b, 1, 39, true);
  const auto ma = check_ratio_monotone(a, 1, 39, Direction::Decreasing, true);
  const auto mb = check_ratio_monotone(b, 1, 39, Direction::Decreasing, true);
  for (std::size_t i = 0; i < ra.results.size(); ++i) {
    EXPECT_EQ(ra.results[i].verdict, rb.results[i].verdict);
    EXPECT_EQ(ma.results[i].verdict, mb.results[i].verdict);
  }
}

TEST(RootLogConcave, BaseRanges) {
  Sequence c(clf()), v(flf());
  EXPECT_TRUE(check_root_log_concave(c, 2, 6).holds_strictly());
  EXPECT_TRUE(check_root_log_concave(v, 2, 9).holds_strictly());
}

TEST(RootLogConcave, GeometricIsEquality) {
  Sequence g(geometric("sixteen", 16));
  const auto strict = check_root_log_concave(g, 2, 30);
  EXPECT_FALSE(strict.holds());
  EXPECT_EQ(strict.first_failure, 2);
  const auto loose = check_root_log_concave(g, 2, 30, {}, false);
  expect_all(loose, Verdict::Holds);
}

TEST(RootLogConcave, Preconditions) {
  Sequence c(clf());
  EXPECT_THROW(check_root_log_concave(c, 1, 5), Error);
  Sequence z = from_terms({1, 2, 0, 5});
  EXPECT_THROW(check_root_log_concave(z, 2, 2), NonPositiveTerm);
}

TEST(RootLogConcave, AgreesWithRootBrackets) {
  std::mt19937_64 rng(99);
  int decided = 0;
  for (int t = 0; t < 300; ++t) {
    const long n = 2 + static_cast<long>(rng() % 7);
    const BigInt a = static_cast<long>(rng() % 1000) + 1;
    const BigInt b = static_cast<long>(rng() % 1000) + 1;
    const BigInt c = static_cast<long>(rng() % 1000) + 1;
    std::vector<BigInt> terms(static_cast<std::size_t>(n + 2), BigInt(1));
    terms[n - 1] = a;
    terms[n] = b;
    terms[n + 1] = c;
    Sequence s = from_terms(terms);
    const auto r = check_root_log_concave(s, n, n, {}, false);
    const Verdict v = r.results.at(0).verdict;
    // (b^{1/n})^2 vs a^{1/(n-1)} c^{1/(n+1)}
    for (unsigned long D = 10; D <= 80; D += 10) {
      const auto rb = root_bracket(b, n, D);
      const auto ra = root_bracket(a, n - 1, D);
      const auto rc = root_bracket(c, n + 1, D);
      const BigRat lhs_lo = rb.first * rb.first, lhs_hi = rb.second * rb.second;
      const BigRat rhs_lo = ra.first * rc.first, rhs_hi = ra.second * rc.second;
      if (lhs_lo > rhs_hi) {
        EXPECT_EQ(v, Verdict::HoldsStrictly);
        ++decided;
        break;
      }
      if (lhs_hi < rhs_lo) {
        EXPECT_EQ(v, Verdict::Fails);
        ++decided;
        break;
      }
    }
  }
  EXPECT_GT(decided, 250);
}

TEST(RootMonotone, Examples) {
  Sequence c(clf()), v(flf()), one(geometric("one", 1));
  EXPECT_TRUE(check_root_monotone(c, 1, 100).holds_strictly());
  EXPECT_TRUE(check_root_monotone(v, 1, 100).holds_strictly());
  const auto r = check_root_monotone(one, 1, 20);
  expect_all(r, Verdict::Fails);
}

TEST(DecisionPaths, ForcedExactMatchesLadder) {
  Sequence c(clf()), v(flf());
  const CheckOptions exact{PrecisionLadder::exact_only(), 1};
  for (Sequence* s : {&c, &v}) {
    const auto a = check_root_log_concave(*s, 2, 80);
    const auto b = check_root_log_concave(*s, 2, 80, exact);
    const auto m1 = check_root_monotone(*s, 1, 80);
    const auto m2 = check_root_monotone(*s, 1, 80, exact);
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      EXPECT_EQ(a.results[i].verdict, b.results[i].verdict);
      EXPECT_EQ(b.results[i].path, DecisionPath::exact());
    }
    for (std::size_t i = 0; i < m1.results.size(); ++i) EXPECT_EQ(m1.results[i].verdict, m2.results[i].verdict);
    EXPECT_GT(a.interval_decided(), a.results.size() / 2);
  }
}

TEST(Reports, ParallelEqualsSequential) {
  Sequence c(clf());
  c.extend_to(301);
  const auto seq = check_root_log_concave(c, 2, 300, {PrecisionLadder{}, 1});
  const auto par = check_root_log_concave(c, 2, 300, {PrecisionLadder{}, 4});
  EXPECT_EQ(seq, par);
}

TEST(Reports, MergeIsAssociative) {
  Sequence v(flf());
  const auto a = check_log_concave(v, 1, 10, true);
  const auto b = check_log_concave(v, 11, 20, true);
  const auto c = check_log_concave(v, 21, 30, true);
  PropertyReport left = a;
  left.merge(b);
  left.merge(c);
  PropertyReport bc = b;
  bc.merge(c);
  PropertyReport right = a;
  right.merge(bc);
  EXPECT_EQ(left, right);
  EXPECT_EQ(left, check_log_concave(v, 1, 30, true));
  EXPECT_EQ(left.first_failure, 1);
}

TEST(Reports, EmptyRangeRejected) {
  Sequence c(clf());
  EXPECT_THROW(check_log_concave(c, 5, 4, true), Error);
}
