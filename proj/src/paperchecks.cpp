#include "logbehave/paperchecks.hpp"

#include <chrono>

#include "logbehave/errors.hpp"

namespace logbehave {

namespace display {
const std::vector<std::string>& all() {
  static const std::vector<std::string> tags = {
      kClfRecurrence,    kFlfRecurrence,    kClfRootLogConcave, kFlfRootLogConcave,
      kClfBoundF,        kClfRatioMap,      kClfRatioBounds,    kClfClearedForm,
      kClfScaledVsRn,    kFlfBoundH,        kFlfLowerBound,     kFlfUpperBound,
      kFlfRatioMap,      kFlfClearedForm,   kFlfHPower,         kFlfBinomialBound,
      kSasvariSign,      kBinomialPiBound,  kFlfBelow16,        kHExceeds16,
      kRootMonotone};
  return tags;
}
}  // namespace display

RatFunc clf_bound() { return RatFunc(PolyZ{-16, 16}, PolyZ{0, 1}); }

RatFunc flf_bound() { return RatFunc(PolyZ{16, 0, -16, 16}, PolyZ{0, 0, -1, 1}); }

void TheoremReport::finalize() {
  holds = !parts.empty();
  for (const auto& p : parts) holds = holds && p.holds;
}

PaperContext::PaperContext(CheckOptions options, unsigned pi_bits)
    : clf_(clf()), flf_(flf()), options_(std::move(options)), pi_bits_(pi_bits) {}

PaperContext::PaperContext(SequenceStore clf_store, SequenceStore flf_store,
                           CheckOptions options, unsigned pi_bits)
    : clf_(clf(), std::move(clf_store)),
      flf_(flf(), std::move(flf_store)),
      options_(std::move(options)),
      pi_bits_(pi_bits) {}

namespace {

void require_min(const char* what, long n, long min) {
  if (n < min) {
    throw InvalidIndex(std::string(what) + " needs n >= " + std::to_string(min) +
                       ", got " + std::to_string(n));
  }
}

Verdict strict_verdict(bool ok) { return ok ? Verdict::HoldsStrictly : Verdict::Fails; }

PropertyReport exact_sweep(const std::string& name, long lo, long hi,
                           const std::function<bool(long)>& pred) {
  return run_indexwise(name, lo, hi, 1, [&](long n) {
    return IndexResult{n, strict_verdict(pred(n)), DecisionPath::exact()};
  });
}

BigInt pow16(long n) { return pow(BigInt(16), static_cast<unsigned long>(n)); }

std::string path_summary(const PropertyReport& r) {
  const auto iv = r.interval_decided();
  if (iv == 0) return "exact";
  return "interval+exact (" + std::to_string(iv) + "/" +
         std::to_string(r.results.size()) + " by interval)";
}

SubResult from_report(const std::string& tag, const std::string& description,
                      const PropertyReport& r, std::string method = {}) {
  SubResult s{tag, description, r.n_lo, r.n_hi, r.holds(),
              method.empty() ? path_summary(r) : std::move(method), {}};
  if (r.first_failure) s.witnesses.push_back("n=" + std::to_string(*r.first_failure));
  if (r.partial) s.witnesses.push_back("partial: " + r.partial_reason);
  return s;
}

SubResult from_certificate(const std::string& tag, const std::string& description,
                           const BoundVerification& bv) {
  const auto& c = bv.certificate;
  SubResult s{tag,
              description,
              c.spec.base_index,
              bv.pointwise.n_hi,
              c.certified() && bv.pointwise.holds() && recheck(c).ok,
              "induction certificate (" + to_string(c.conclusion) +
                  ") + exact pointwise",
              {}};
  if (!c.note.empty()) s.witnesses.push_back(c.note);
  if (bv.pointwise.first_failure) {
    s.witnesses.push_back("pointwise n=" + std::to_string(*bv.pointwise.first_failure));
  }
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SubResult integrality(Sequence& seq, const std::string& tag, long n_hi) {
  SubResult s{tag, "terms 0.." + std::to_string(n_hi) + " are positive integers",
              0, n_hi, true, "exact division at every step", {}};
  try {
    seq.extend_to(n_hi);
    for (long k = 0; k <= n_hi; ++k) {
      if (sgn(seq.term(k)) <= 0) {
        s.holds = false;
        s.witnesses.push_back("n=" + std::to_string(k));
        break;
      }
    }
  } catch (const NonIntegralTerm& e) {
    s.holds = false;
    s.witnesses.push_back(e.what());
  }
  return s;
}

SubResult ratio_map_shape(const std::string& tag, const Order2Recurrence& rec,
                          const RatFunc& expect_a, const RatFunc& expect_b,
                          const PropertyReport& fidelity) {
  const RatioMap m = ratio_map(rec);
  SubResult s = from_report(tag,
                            "ratio map A=" + m.A.to_string() + ", B=" + m.B.to_string() +
                                " reproduces consecutive ratios",
                            fidelity);
  if (!(m.A == expect_a) || !(m.B == expect_b)) {
    s.holds = false;
    s.witnesses.push_back("unexpected ratio map coefficients");
  }
  return s;
}

}  // namespace

BigRat rn_closed_form(long n) {
  require_min("r_n", n, 3);
  const BigInt nn(n);
  const auto half = static_cast<unsigned long>(n * (n - 1) / 2);
  return pow(make_rat((nn - 2) * (nn + 1), (nn - 1) * nn), half) *
         pow(make_rat(nn - 2, nn - 1), static_cast<unsigned long>(n));
}

BigRat rn_product_form(long n) {
  require_min("r_n", n, 3);
  const long c = n * (n - 1) / 2;
  const BigRat first = BigRat(1) - make_rat(BigInt(1), BigInt(c));
  const BigRat second = BigRat(1) - make_rat(BigInt(1), BigInt(n - 1));
  return pow(first, static_cast<unsigned long>(c)) *
         pow(second, static_cast<unsigned long>(n - 1)) * second;
}

bool rn_product_identity(long n) { return rn_closed_form(n) == rn_product_form(n); }

PropertyReport check_rn_product_identity(long n_lo, long n_hi) {
  require_min("r_n identity", n_lo, 3);
  return run_indexwise("rn_product_identity", n_lo, n_hi, 1, [](long n) {
    return IndexResult{n, rn_product_identity(n) ? Verdict::Holds : Verdict::Fails,
                       DecisionPath::exact()};
  });
}

ScaledPair ln_rn(Sequence& clf_seq, long n) {
  require_min("l_n, r_n", n, 3);
  return {make_rat(clf_seq.term(n), pow16(n)), rn_closed_form(n)};
}

PropertyReport euler_seq_increasing(long n_lo, long n_hi) {
  require_min("(1-1/n)^n monotonicity", n_lo, 1);
  auto e = [](long n) {
    return pow(BigRat(1) - make_rat(BigInt(1), BigInt(n)), static_cast<unsigned long>(n));
  };
  return exact_sweep("euler_seq_increasing", n_lo, n_hi,
                     [&](long n) { return e(n + 1) > e(n); });
}

PropertyReport claim_ln_decreasing(Sequence& clf_seq, long n_lo, long n_hi) {
  require_min("l_n monotonicity", n_lo, 3);
  clf_seq.extend_to(n_hi + 1);
  return exact_sweep("clf.l_decreasing", n_lo, n_hi, [&](long n) {
    const BigRat cur = make_rat(clf_seq.term(n), pow16(n));
    const BigRat next = make_rat(clf_seq.term(n + 1), pow16(n + 1));
    const bool dec = next < cur;
    if (dec != (clf_seq.ratio(n + 1) < 16)) {
      throw SoundnessError("l_n monotonicity disagrees with ratio < 16 at n = " +
                           std::to_string(n + 1));
    }
    return dec;
  });
}

PropertyReport claim_rn_increasing(long n_lo, long n_hi) {
  require_min("r_n monotonicity", n_lo, 3);
  return exact_sweep("r_increasing", n_lo, n_hi, [](long n) {
    return rn_closed_form(n + 1) > rn_closed_form(n);
  });
}

PropertyReport check_ln_below_rn(Sequence& clf_seq, long n_lo, long n_hi) {
  require_min("l_n < r_n", n_lo, 3);
  clf_seq.extend_to(n_hi);
  return exact_sweep("clf.l_below_r", n_lo, n_hi, [&](long n) {
    const auto p = ln_rn(clf_seq, n);
    return p.l < p.r;
  });
}

std::optional<long> ln_rn_crossover(Sequence& clf_seq, long n_lo, long n_hi) {
  for (long n = std::max(n_lo, 3L); n <= n_hi; ++n) {
    const auto p = ln_rn(clf_seq, n);
    if (p.l < p.r) return n;
  }
  return std::nullopt;
}

BigInt binom_central(long n) {
  if (n < 0) throw InvalidIndex("central binomial of a negative index");
  BigInt c = 1;
  for (long k = 1; k <= n; ++k) {
    c *= n + k;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return c;
}

PropertyReport check_Vu1(Sequence& flf_seq, long n_lo, long n_hi) {
  require_min("V_n binomial bound", n_lo, 1);
  flf_seq.extend_to(n_hi);
  return exact_sweep("flf.binomial_bound", n_lo, n_hi, [&](long n) {
    const BigInt c = binom_central(n);
    return flf_seq.term(n) < (2 * n + 1) * c * c;
  });
}

SignReport sasvari_exponent_sign(long n_lo, long n_hi) {
  require_min("exponent sign", n_lo, 1);
  auto rep = exact_sweep("sasvari_exponent_sign", n_lo, n_hi, [](long n) {
    const BigInt nn(n);
    const BigRat expo = -make_rat(BigInt(1), 8 * nn) + make_rat(BigInt(1), 192 * nn * nn * nn);
    return sgn(expo) < 0;
  });
  return {std::move(rep), positive_on_integer_tail(PolyZ{-1, 0, 24}, 1)};
}

PropertyReport check_nfu(long n_lo, long n_hi, const PiEnclosure& pi) {
  require_min("central binomial pi bound", n_lo, 1);
  // Strict inequality with pi replaced by a larger number implies it for pi.
  const BigRat& sound = pi.hi;
  return exact_sweep("central_binomial_pi_bound", n_lo, n_hi, [&](long n) {
    const BigInt c = binom_central(n);
    return sound * BigRat(n * c * c) < BigRat(pow16(n));
  });
}

namespace {

bool vu2_first(const BigInt& v, long n, const BigRat& pi_hi) {
  return pi_hi * BigRat(v * n) < BigRat((2 * n + 1) * pow16(n));
}

}  // namespace

PropertyReport check_Vu2(Sequence& flf_seq, long n_lo, long n_hi,
                         const PiEnclosure& pi) {
  require_min("V_n < 16^n chain", n_lo, 1);
  flf_seq.extend_to(n_hi);
  return exact_sweep("flf.below_16_power", n_lo, n_hi, [&](long n) {
    const BigInt v = flf_seq.term(n);
    const bool first = vu2_first(v, n, pi.hi);
    const bool second = BigRat(2 * n + 1) < pi.lo * n;
    const bool direct = v < pow16(n);
    return first && second && direct;
  });
}

PropertyReport check_binomial_chain(Sequence& flf_seq, long n_lo, long n_hi,
                                    const PiEnclosure& pi) {
  require_min("binomial chain", n_lo, 1);
  flf_seq.extend_to(n_hi);
  return exact_sweep("flf.binomial_chain", n_lo, n_hi, [&](long n) {
    const BigInt v = flf_seq.term(n);
    const BigInt c = binom_central(n);
    const bool vu1 = v < (2 * n + 1) * c * c;
    const bool nfu = pi.hi * BigRat(n * c * c) < BigRat(pow16(n));
    const bool vu2 = vu2_first(v, n, pi.hi);
    return !(vu1 && nfu) || vu2;
  });
}

HExceeds16Report h_gt_16(long n_lo, long n_hi) {
  require_min("h(n) > 16", n_lo, 2);
  const RatFunc h = flf_bound();
  const RatFunc diff = h - RatFunc::constant(BigRat(16));
  HExceeds16Report r;
  r.numerator = diff.num();
  r.denominator = diff.den();
  r.numerator_certificate = positive_on_integer_tail(diff.num(), 2);
  r.denominator_certificate = positive_on_integer_tail(diff.den(), 2);
  r.pointwise = exact_sweep("h_exceeds_16", n_lo, n_hi,
                            [&](long n) { return h(BigInt(n)) > 16; });
  return r;
}

PropertyReport check_vuh(Sequence& flf_seq, long n_lo, long n_hi,
                         const CheckOptions& opt) {
  require_min("h(n)^n > V_n", n_lo, 2);
  flf_seq.extend_to(n_hi);
  const RatFunc h = flf_bound();
  return run_indexwise("flf.h_power_exceeds_term", n_lo, n_hi, opt.jobs, [&](long n) {
    const BigInt nn(n);
    const auto un = static_cast<unsigned long>(n);
    const BigInt v = flf_seq.term(n);
    const BigInt d = nn * nn * nn - nn * nn;
    const PowerTerm lhs[] = {{BigInt(16), un}, {d + 1, un}};
    const PowerTerm rhs[] = {{v, 1}, {d, un}};
    const auto c = cmp_power_products(lhs, rhs, opt.ladder);
    const bool holds = c.order == Ordering::Greater;
    // 16^n > V_n together with h(n) > 16 forces the verdict.
    if (v < pow16(n) && h(nn) > 16 && !holds) {
      throw SoundnessError("h(n)^n > V_n contradicts V_n < 16^n < h(n)^n at n = " +
                           std::to_string(n));
    }
    return IndexResult{n, strict_verdict(holds), c.path};
  });
}

PropertyReport check_ratio_map_fidelity(Sequence& seq, long n_lo, long n_hi) {
  const RatioMap m = ratio_map(seq.recurrence());
  require_min("ratio map fidelity", n_lo, m.valid_from);
  seq.extend_to(n_hi + 1);
  return exact_sweep(seq.name() + ".ratio_map", n_lo, n_hi, [&](long n) {
    return m.next(n, seq.ratio(n)) == seq.ratio(n + 1);
  });
}

TheoremReport theorem_clf_root_log_concavity(PaperContext& ctx, long n_hi) {
  require_min("CLF root log-concavity pipeline", n_hi, 7);
  const auto t0 = std::chrono::steady_clock::now();
  Sequence& p = ctx.clf_seq();
  const auto& opt = ctx.options();
  p.extend_to(std::max(n_hi + 1, 206L));

  TheoremReport rep;
  rep.id = "clf-root-log-concavity";
  rep.add(integrality(p, display::kClfRecurrence, n_hi + 1));

  rep.add(from_report(display::kClfClearedForm,
                      "base cases 2..6 of P_n^{2(n^2-1)} > P_{n-1}^{n(n+1)} P_{n+1}^{n(n-1)}",
                      check_root_log_concave(p, 2, 6, opt)));

  const RatFunc f = clf_bound();
  {
    SubResult s{display::kClfBoundF, "f(n) = 16(n-1)/n is positive and pole-free on n >= 2",
                2, n_hi, true, "positivity certificate", {}};
    const auto c = positive_on_integer_tail(f.num() * f.den(), 2);
    s.holds = c.certified && recheck(c).ok;
    rep.add(std::move(s));
  }

  rep.add(ratio_map_shape(display::kClfRatioMap, p.recurrence(),
                          RatFunc(PolyZ{8, 24, 24}, PolyZ{1, 2, 1}),
                          RatFunc(PolyZ{0, 0, 128}, PolyZ{1, 2, 1}),
                          check_ratio_map_fidelity(p, 1, n_hi)));

  const auto bounds = verify_ratio_bounds(
      p, {BoundSpec{f, BoundSide::Lower, -1, 5}, BoundSpec{f, BoundSide::Upper, 0, 5}});
  for (const auto& bv : bounds) {
    rep.add(from_certificate(display::kClfRatioBounds,
                             std::string(bv.certificate.spec.side == BoundSide::Lower
                                             ? "f(n-1) < P_n/P_{n-1}"
                                             : "P_n/P_{n-1} < f(n)") +
                                 " for n >= 5",
                             bv));
    rep.certificates.push_back(bv.certificate);
  }

  rep.add(from_report(display::kClfScaledVsRn, "l_n strictly decreasing from n = 5",
                      claim_ln_decreasing(p, 5, n_hi)));
  rep.add(from_report(display::kClfScaledVsRn, "r_n strictly increasing from n = 5",
                      claim_rn_increasing(5, n_hi)));
  rep.add(from_report(display::kClfScaledVsRn, "r_n product identity",
                      check_rn_product_identity(3, n_hi)));
  rep.add(from_report(display::kClfScaledVsRn, "(1-1/n)^n strictly increasing",
                      euler_seq_increasing(1, n_hi)));
  {
    const auto cross = ln_rn_crossover(p, 5, n_hi);
    SubResult s{display::kClfScaledVsRn, "first n >= 5 with l_n < r_n is 7", 5, n_hi,
                cross && *cross == 7, "exact", {}};
    if (cross) s.witnesses.push_back("crossover n=" + std::to_string(*cross));
    rep.add(std::move(s));
  }
  rep.add(from_report(display::kClfScaledVsRn, "l_n < r_n pointwise from n = 7",
                      check_ln_below_rn(p, 7, n_hi)));

  rep.add(from_report(display::kClfRootLogConcave,
                      "P_n^{1/n} strictly log-concave (direct sweep)",
                      check_root_log_concave(p, 2, n_hi, opt)));
  rep.notes.push_back("tail n >= 7 follows from the ratio bounds and l_n < r_n; "
                      "the direct sweep is pointwise evidence only");
  rep.finalize();
  rep.seconds = seconds_since(t0);
  return rep;
}

TheoremReport theorem_flf_root_log_concavity(PaperContext& ctx, long n_hi) {
  require_min("FLF root log-concavity pipeline", n_hi, 10);
  const auto t0 = std::chrono::steady_clock::now();
  Sequence& v = ctx.flf_seq();
  const auto& opt = ctx.options();
  const PiEnclosure pi = ctx.pi();
  v.extend_to(std::max(n_hi + 1, 212L));

  TheoremReport rep;
  rep.id = "flf-root-log-concavity";
  rep.add(integrality(v, display::kFlfRecurrence, n_hi + 1));

  rep.add(from_report(display::kFlfClearedForm,
                      "base cases 2..9 decided directly, without bound certificates",
                      check_root_log_concave(v, 2, 9, opt)));

  const RatFunc h = flf_bound();
  {
    SubResult s{display::kFlfBoundH,
                "h(n) = 16(n^3-n^2+1)/(n^3-n^2) is positive and pole-free on n >= 2", 2,
                n_hi, true, "positivity certificate", {}};
    const auto c = positive_on_integer_tail(h.num() * h.den(), 2);
    s.holds = c.certified && recheck(c).ok;
    rep.add(std::move(s));
  }

  rep.add(ratio_map_shape(display::kFlfRatioMap, v.recurrence(),
                          RatFunc(PolyZ{8, 40, 24}, PolyZ{1, 2, 1}),
                          RatFunc(PolyZ{-128, 128}, PolyZ{0, 1}),
                          check_ratio_map_fidelity(v, 1, n_hi)));

  {
    // Smallest base at which h(n) is inductively a lower bound.
    auto lower = smallest_certified_base(v, h, BoundSide::Lower, 0, 4, 40);
    BoundSpec spec{h, BoundSide::Lower, 0, lower ? lower->spec.base_index : 4};
    auto bv = verify_ratio_bounds(v, {spec}).front();
    SubResult s = from_certificate(display::kFlfLowerBound,
                                   "V_n/V_{n-1} > h(n) for n >= " +
                                       std::to_string(spec.base_index),
                                   bv);
    rep.notes.push_back(lower ? "lower bound h(n) certified from base " +
                                    std::to_string(spec.base_index)
                              : "lower bound h(n) NotCertified for any base in [4, 40]");
    rep.add(std::move(s));
    rep.certificates.push_back(bv.certificate);
  }
  {
    auto bv = verify_ratio_bounds(v, {BoundSpec{h, BoundSide::Upper, -1, 11}}).front();
    rep.add(from_certificate(display::kFlfUpperBound,
                             "V_n/V_{n-1} < h(n-1) for n >= 11", bv));
    rep.certificates.push_back(bv.certificate);
    rep.notes.push_back("upper bound h(n-1) uses base index 11");
  }

  rep.add(from_report(display::kFlfHPower, "h(n)^n > V_n for n >= 10",
                      check_vuh(v, 10, n_hi, opt)));
  rep.add(from_report(display::kFlfBinomialBound, "V_n < (2n+1) C(2n,n)^2",
                      check_Vu1(v, 1, n_hi)));
  {
    auto sr = sasvari_exponent_sign(1, n_hi);
    SubResult s = from_report(display::kSasvariSign, "-1/(8n) + 1/(192n^3) < 0", sr.pointwise);
    s.holds = s.holds && sr.certificate.certified && recheck(sr.certificate).ok;
    s.method = "exact + positivity certificate for 24n^2 - 1";
    rep.add(std::move(s));
  }
  rep.add(from_report(display::kBinomialPiBound, "pi n C(2n,n)^2 < 16^n (upper end of pi)",
                      check_nfu(1, n_hi, pi)));
  rep.add(from_report(display::kFlfBelow16, "V_n < (2n+1)16^n/(pi n) < 16^n",
                      check_Vu2(v, 1, n_hi, pi)));
  rep.add(from_report(display::kFlfBelow16, "binomial bounds imply the 16^n bound",
                      check_binomial_chain(v, 1, n_hi, pi)));
  {
    auto hr = h_gt_16(2, n_hi);
    SubResult s = from_report(display::kHExceeds16, "h(n) > 16", hr.pointwise);
    s.holds = s.holds && hr.numerator_certificate.certified &&
              hr.denominator_certificate.certified && hr.numerator == PolyZ{16};
    s.method = "exact + positivity certificates (h(n) - 16 = " + hr.numerator.to_string() +
               "/(" + hr.denominator.to_string() + "))";
    rep.add(std::move(s));
  }

  rep.add(from_report(display::kFlfRootLogConcave,
                      "V_n^{1/n} strictly log-concave (direct sweep)",
                      check_root_log_concave(v, 2, n_hi, opt)));
  rep.finalize();
  rep.seconds = seconds_since(t0);
  return rep;
}

TheoremReport proposition_root_monotonicity(PaperContext& ctx, long n_hi, long gap_hi) {
  require_min("root monotonicity pipeline", n_hi, 10);
  require_min("ratio gap horizon", gap_hi, 11);
  const auto t0 = std::chrono::steady_clock::now();
  Sequence& p = ctx.clf_seq();
  Sequence& v = ctx.flf_seq();
  const auto& opt = ctx.options();
  p.extend_to(std::max(n_hi + 1, gap_hi));
  v.extend_to(std::max(n_hi + 1, gap_hi));

  TheoremReport rep;
  rep.id = "root-monotonicity";
  rep.add(from_report(display::kRootMonotone, "P_{n+1}^n > P_n^{n+1}",
                      check_root_monotone(p, 1, n_hi, opt)));
  rep.add(from_report(display::kRootMonotone, "V_{n+1}^n > V_n^{n+1}",
                      check_root_monotone(v, 1, n_hi, opt)));

  rep.add(from_report(display::kRootMonotone,
                      "16 - 16/(n-1) < P_n/P_{n-1} < 16 - 16/n, so |ratio - 16| < 16/(n-1)",
                      exact_sweep("clf.ratio_gap", 5, gap_hi, [&](long n) {
                        const BigRat r = p.ratio(n);
                        const BigRat lo = BigRat(16) - make_rat(BigInt(16), BigInt(n - 1));
                        const BigRat hi = BigRat(16) - make_rat(BigInt(16), BigInt(n));
                        const BigRat gap = abs(r - 16);
                        return lo < r && r < hi && gap < make_rat(BigInt(16), BigInt(n - 1));
                      })));
  const RatFunc h = flf_bound();
  rep.add(from_report(display::kRootMonotone,
                      "h(n) < V_n/V_{n-1} < h(n-1), so |ratio - 16| < h(n-1) - 16",
                      exact_sweep("flf.ratio_gap", 11, gap_hi, [&](long n) {
                        const BigRat r = v.ratio(n);
                        const BigRat lo = h(BigInt(n));
                        const BigRat hi = h(BigInt(n - 1));
                        return lo < r && r < hi && abs(r - 16) < hi - 16;
                      })));
  rep.notes.push_back(
      "monotonicity verdicts are pointwise on the checked range; the limit 16 of the "
      "ratios is supported only by the bounded-gap evidence, not certified");
  rep.finalize();
  rep.seconds = seconds_since(t0);
  return rep;
}

}  // namespace logbehave
