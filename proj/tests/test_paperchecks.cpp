#include <gtest/gtest.h>

#include <set>

#include "logbehave/errors.hpp"
#include "logbehave/paperchecks.hpp"
#include "oracles.hpp"

using namespace logbehave;

namespace {

// C(2n, n) through Pascal's triangle.
BigInt pascal_central(long n) {
  std::vector<BigInt> row{1};
  for (long i = 1; i <= 2 * n; ++i) {
    std::vector<BigInt> next(row.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

}  // namespace

TEST(ScaledTerms, SmallValues) {
  Sequence p(clf());
  const auto three = ln_rn(p, 3);
  EXPECT_EQ(three.l, make_rat(7, 32));
  EXPECT_EQ(three.r, make_rat(1, 27));
  EXPECT_GT(three.l, three.r);
  const auto seven = ln_rn(p, 7);
  EXPECT_LT(seven.l, seven.r);
  EXPECT_THROW(ln_rn(p, 2), InvalidIndex);
  for (long n : {4L, 9L, 40L, 150L}) {
    EXPECT_EQ(ln_rn(p, n).l / ln_rn(p, n - 1).l, p.ratio(n) / 16);
  }
}

TEST(ScaledTerms, ProductIdentity) {
  for (long n : {3L, 5L, 20L}) EXPECT_TRUE(rn_product_identity(n));
  EXPECT_EQ(rn_closed_form(5), rn_product_form(5));
  EXPECT_THROW(rn_closed_form(2), InvalidIndex);
  EXPECT_TRUE(check_rn_product_identity(3, 120).holds());
}

TEST(ScaledTerms, Claims) {
  Sequence p(clf());
  EXPECT_TRUE(claim_ln_decreasing(p, 5, 100).holds_strictly());
  EXPECT_TRUE(claim_rn_increasing(5, 100).holds_strictly());
  EXPECT_EQ(ln_rn_crossover(p, 5, 100), 7);
  EXPECT_TRUE(check_ln_below_rn(p, 7, 100).holds_strictly());
  EXPECT_FALSE(check_ln_below_rn(p, 5, 6).holds());
}

TEST(EulerSequence, Increasing) {
  EXPECT_TRUE(euler_seq_increasing(2, 100).holds_strictly());
  EXPECT_TRUE(euler_seq_increasing(1, 1).holds_strictly());
  EXPECT_GT(make_rat(8, 27), make_rat(1, 4));
}

TEST(CentralBinomial, Values) {
  EXPECT_EQ(binom_central(0), 1);
  EXPECT_EQ(binom_central(5), 252);
  for (long n : {1L, 7L, 33L, 100L}) {
    EXPECT_EQ(binom_central(n), pascal_central(n));
    EXPECT_EQ(binom_central(n) * n, binom_central(n - 1) * (2 * n - 1) * 2);
  }
}

TEST(FlfBounds, Vu1) {
  Sequence v(flf());
  EXPECT_TRUE(check_Vu1(v, 1, 300).holds_strictly());
  EXPECT_LT(BigInt(8), 3 * binom_central(1) * binom_central(1));
  EXPECT_LT(BigInt(144), 5 * binom_central(2) * binom_central(2));
}

TEST(FlfBounds, SasvariSign) {
  const auto r = sasvari_exponent_sign(1, 1000);
  EXPECT_TRUE(r.pointwise.holds_strictly());
  EXPECT_TRUE(r.certificate.certified);
  EXPECT_EQ(r.certificate.polynomial, PolyZ({-1, 0, 24}));
  EXPECT_EQ(r.certificate.shifted, (std::vector<BigInt>{23, 48, 24}));
  EXPECT_EQ(make_rat(-1, 8) + make_rat(1, 192), make_rat(-23, 192));
}

TEST(FlfBounds, CentralBinomialPi) {
  const PiEnclosure pi = pi_enclosure(64);
  EXPECT_LT(pi.hi * 4, BigRat(16));
  EXPECT_TRUE(check_nfu(1, 300, pi).holds_strictly());
}

TEST(FlfBounds, CentralBinomialPiUsesUpperEnd) {
  // Only the upper end 4 can refute n = 1 (4 * 4 = 16); a checker reading the
  // lower end 3 would wrongly accept.
  const PiEnclosure loose{BigRat(3), BigRat(4)};
  const auto r = check_nfu(1, 3, loose);
  EXPECT_FALSE(r.holds());
  EXPECT_EQ(r.first_failure, 1);
}

TEST(FlfBounds, Vu2) {
  Sequence v(flf());
  const PiEnclosure pi = pi_enclosure(64);
  EXPECT_TRUE(check_Vu2(v, 1, 300, pi).holds_strictly());
  EXPECT_LT(BigRat(3), pi.lo);
  // An enclosure whose lower end is below 3 cannot show 2n + 1 < pi n at n = 1.
  const PiEnclosure low{make_rat(29, 10), make_rat(315, 100)};
  EXPECT_EQ(check_Vu2(v, 1, 5, low).first_failure, 1);
  // An enclosure whose upper end is too large cannot show the first inequality.
  const PiEnclosure high{make_rat(314, 100), BigRat(6)};
  EXPECT_FALSE(check_Vu2(v, 1, 5, high).holds());
}

TEST(FlfBounds, ChainImplication) {
  Sequence v(flf());
  EXPECT_TRUE(check_binomial_chain(v, 1, 300, pi_enclosure(64)).holds_strictly());
}

TEST(FlfBounds, HExceeds16) {
  const auto r = h_gt_16(2, 500);
  EXPECT_TRUE(r.pointwise.holds_strictly());
  EXPECT_EQ(r.numerator, PolyZ{16});
  EXPECT_EQ(r.denominator, PolyZ({0, 0, -1, 1}));
  EXPECT_TRUE(r.numerator_certificate.certified);
  EXPECT_TRUE(r.denominator_certificate.certified);
  EXPECT_EQ(flf_bound()(BigInt(2)), BigRat(20));
}

TEST(FlfBounds, HPowerExceedsTerm) {
  Sequence v(flf());
  EXPECT_TRUE(check_vuh(v, 10, 300).holds_strictly());
  EXPECT_TRUE(check_vuh(v, 2, 9).holds_strictly());
  EXPECT_GT(flf_bound()(BigInt(2)) * flf_bound()(BigInt(2)), BigRat(144));
}

TEST(RatioMap, Fidelity) {
  Sequence p(clf()), v(flf());
  EXPECT_TRUE(check_ratio_map_fidelity(p, 1, 200).holds());
  EXPECT_TRUE(check_ratio_map_fidelity(v, 1, 200).holds());
}

TEST(Pipelines, ClfTheorem) {
  PaperContext ctx;
  const auto rep = theorem_clf_root_log_concavity(ctx, 200);
  EXPECT_TRUE(rep.holds);
  for (const auto& part : rep.parts) EXPECT_TRUE(part.holds) << part.display << ": " << part.description;
  EXPECT_EQ(rep.certificates.size(), 2u);
  EXPECT_THROW(theorem_clf_root_log_concavity(ctx, 6), InvalidIndex);
}

TEST(Pipelines, FlfTheorem) {
  PaperContext ctx;
  const auto rep = theorem_flf_root_log_concavity(ctx, 200);
  EXPECT_TRUE(rep.holds);
  bool base_range = false, upper_base = false;
  for (const auto& part : rep.parts) {
    EXPECT_TRUE(part.holds) << part.display << ": " << part.description;
    if (part.display == display::kFlfClearedForm && part.n_lo == 2 && part.n_hi == 9) {
      base_range = part.method.find("certificate") == std::string::npos;
    }
    if (part.display == display::kFlfUpperBound) upper_base = part.n_lo == 11;
  }
  EXPECT_TRUE(base_range);
  EXPECT_TRUE(upper_base);
  EXPECT_THROW(theorem_flf_root_log_concavity(ctx, 9), InvalidIndex);
}

TEST(Pipelines, RootMonotonicity) {
  PaperContext ctx;
  const auto rep = proposition_root_monotonicity(ctx, 200, 1000);
  EXPECT_TRUE(rep.holds);
  bool limit_note = false;
  for (const auto& n : rep.notes) limit_note |= n.find("not certified") != std::string::npos;
  EXPECT_TRUE(limit_note);
  const BigRat r = ctx.clf_seq().ratio(1000);
  EXPECT_LT(abs(r - 16), make_rat(16, 999));
}

TEST(Pipelines, DisplayCoverage) {
  PaperContext ctx;
  std::set<std::string> seen;
  for (const auto& rep : {theorem_clf_root_log_concavity(ctx, 20), theorem_flf_root_log_concavity(ctx, 20),
                          proposition_root_monotonicity(ctx, 20, 100)}) {
    for (const auto& part : rep.parts) {
      EXPECT_FALSE(part.display.empty());
      seen.insert(part.display);
    }
  }
  const auto& all = display::all();
  EXPECT_EQ(seen, std::set<std::string>(all.begin(), all.end()));
}

TEST(Pipelines, SweepAgreesWithCertifiedTail) {
  PaperContext ctx;
  Sequence& p = ctx.clf_seq();
  const auto rep = theorem_clf_root_log_concavity(ctx, 60);
  const auto direct = check_root_log_concave(p, 7, 60);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(direct.holds_strictly());
}
