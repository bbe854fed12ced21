#include "logbehave/induction.hpp"

#include <algorithm>

#include "logbehave/errors.hpp"

namespace logbehave {

std::string to_string(PositivityMethod m) {
  return m == PositivityMethod::ShiftedCoefficients ? "ShiftedCoefficients"
                                                    : "RootBoundSweep";
}

std::string to_string(BoundSide s) {
  return s == BoundSide::Lower ? "lower" : "upper";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Certified:
      return "Certified";
    case Conclusion::BaseFails:
      return "BaseFails";
    default:
      return "StepFails";
  }
}

bool operator==(const InductionCertificate& a, const InductionCertificate& b) {
  return a.recurrence == b.recurrence && a.map == b.map && a.spec == b.spec &&
         a.base == b.base && a.side_conditions == b.side_conditions &&
         a.step_numerator == b.step_numerator &&
         a.step_denominator == b.step_denominator &&
         a.step_positivity == b.step_positivity &&
         a.ratio_positivity == b.ratio_positivity &&
         a.conclusion == b.conclusion && a.note == b.note;
}

namespace {

bool shifted_ok(const std::vector<BigInt>& c) {
  if (c.empty() || sgn(c.front()) <= 0) return false;
  return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return sgn(x) >= 0; });
}

}  // namespace

PositivityCertificate positive_on_integer_tail(const PolyZ& p, long N,
                                               long max_sweep) {
  if (p.is_zero()) throw DomainError("positivity of the zero polynomial");
  PositivityCertificate cert;
  cert.polynomial = p;
  cert.tail_start = N;

  const PolyZ q = poly_shift(p, BigInt(N));
  if (shifted_ok(q.coeffs())) {
    cert.method = PositivityMethod::ShiftedCoefficients;
    cert.shifted = q.coeffs();
    cert.certified = true;
    return cert;
  }

  cert.method = PositivityMethod::RootBoundSweep;
  cert.root_bound = cauchy_root_bound(p);
  // Past the root bound p has the sign of its leading coefficient, so the
  // sweep to max(N, R) either finds a nonpositive value or proves the tail.
  const BigInt last = std::max(BigInt(N), cert.root_bound);
  if (last - N > max_sweep) return cert;
  const long end = last.get_si();
  for (long n = N; n <= end; ++n) {
    BigInt v = p(BigInt(n));
    const bool bad = sgn(v) <= 0;
    cert.evaluations.emplace_back(n, std::move(v));
    if (bad) {
      cert.witness = n;
      return cert;
    }
  }
  if (sgn(p.leading()) > 0) {
    cert.certified = true;
  } else {
    // Unreachable for nonzero p: a negative leading coefficient makes
    // p(max(N, R)) negative.
    cert.witness = end;
  }
  return cert;
}

RecheckResult recheck(const PositivityCertificate& cert) {
  const PolyZ& p = cert.polynomial;
  if (p.is_zero()) return RecheckResult::fail("zero polynomial");
  if (cert.method == PositivityMethod::ShiftedCoefficients) {
    if (cert.shifted != poly_shift(p, BigInt(cert.tail_start)).coeffs()) {
      return RecheckResult::fail("shifted coefficients do not match p(x + N)");
    }
    if (!cert.evaluations.empty() || cert.witness) {
      return RecheckResult::fail("stray sweep data in a shifted-coefficient certificate");
    }
    if (cert.certified != shifted_ok(cert.shifted)) {
      return RecheckResult::fail("verdict does not follow from the shifted coefficients");
    }
    return {};
  }

  if (!cert.shifted.empty()) return RecheckResult::fail("stray shifted coefficients");
  if (cert.root_bound != cauchy_root_bound(p)) {
    return RecheckResult::fail("root bound does not match the Cauchy bound");
  }
  long expect = cert.tail_start;
  for (const auto& [n, v] : cert.evaluations) {
    if (n != expect++) return RecheckResult::fail("sweep points are not consecutive");
    if (p(BigInt(n)) != v) {
      return RecheckResult::fail("wrong value at n = " + std::to_string(n));
    }
  }
  if (cert.certified) {
    if (cert.witness) return RecheckResult::fail("certified with a witness");
    if (sgn(p.leading()) <= 0) return RecheckResult::fail("leading coefficient not positive");
    const BigInt last = std::max(BigInt(cert.tail_start), cert.root_bound);
    if (cert.evaluations.empty() || BigInt(cert.evaluations.back().first) != last) {
      return RecheckResult::fail("sweep does not reach the root bound");
    }
    for (const auto& [n, v] : cert.evaluations) {
      if (sgn(v) <= 0) return RecheckResult::fail("nonpositive value in a certified sweep");
    }
    return {};
  }
  if (!cert.witness) {
    // Abandoned sweep: nothing claimed.
    if (!cert.evaluations.empty()) return RecheckResult::fail("abandoned sweep with data");
    return {};
  }
  // The witness is the first nonpositive point of the sweep.
  const long w = *cert.witness;
  if (cert.evaluations.empty() || cert.evaluations.back().first != w) {
    return RecheckResult::fail("witness is not where the sweep stopped");
  }
  for (std::size_t i = 0; i + 1 < cert.evaluations.size(); ++i) {
    if (sgn(cert.evaluations[i].second) <= 0) {
      return RecheckResult::fail("sweep continued past a nonpositive value");
    }
  }
  if (sgn(cert.evaluations.back().second) > 0) return RecheckResult::fail("witness value is positive");
  return {};
}

namespace {

constexpr const char* kBSign = "ratio_map_B_positive";
constexpr const char* kADen = "ratio_map_A_denominator_positive";
constexpr const char* kBoundPos = "bound_positive";
constexpr const char* kStepDen = "step_denominator_positive";

// Integer m >= start with den(m) = 0, if any.
std::optional<long> pole_on_tail(const PolyZ& den, long start) {
  const PolyZ q = poly_shift(den, BigInt(start));
  if (q.degree() <= 0) return std::nullopt;
  const long r = cauchy_root_bound(q).get_si();
  for (long x = 0; x <= r; ++x) {
    if (sgn(q(BigInt(x))) == 0) return start + x;
  }
  return std::nullopt;
}

RatFunc step_quantity(const RatioMap& map, const BoundSpec& spec) {
  const RatFunc b0 = spec.bound.shifted(BigInt(spec.shift));
  const RatFunc b1 = spec.bound.shifted(BigInt(spec.shift + 1));
  RatFunc e = map.A - map.B / b0 - b1;
  if (spec.side == BoundSide::Upper) e = -e;
  return e;
}

std::vector<SideCondition> expected_side_conditions(const RatioMap& map,
                                                    const BoundSpec& spec,
                                                    const RatFunc& step) {
  const long N = spec.base_index;
  const RatFunc b0 = spec.bound.shifted(BigInt(spec.shift));
  return {
      {kBSign, positive_on_integer_tail(map.B.num() * map.B.den(), N)},
      {kADen, positive_on_integer_tail(map.A.den(), N)},
      {kBoundPos, positive_on_integer_tail(b0.num() * b0.den(), N)},
      {kStepDen, positive_on_integer_tail(step.den(), N)},
  };
}

bool is_constant(const RatFunc& r) { return r.num().degree() <= 0 && r.den().degree() == 0; }

bool base_holds(BoundSide side, const BigRat& v, const BigRat& b) {
  return side == BoundSide::Lower ? v > b : v < b;
}

BigRat ratio_by_iteration(const Order2Recurrence& rec, long n) {
  SequenceStore store;
  return ratio(rec, n, store);
}

Conclusion conclude(const InductionCertificate& c) {
  if (!c.base.holds) return Conclusion::BaseFails;
  for (const auto& s : c.side_conditions) {
    if (!s.certificate.certified) return Conclusion::StepFails;
  }
  if (!c.step_positivity.certified) return Conclusion::StepFails;
  if (c.spec.side == BoundSide::Upper &&
      (c.ratio_positivity.size() != 1 || !c.ratio_positivity.front().certified())) {
    return Conclusion::StepFails;
  }
  return Conclusion::Certified;
}

// A certified constant lower bound c > 0 for v(n), n >= N, searched from
// floor(v(N)) downwards.
std::optional<InductionCertificate> positive_lower_bound(Sequence& seq, long N,
                                                         const BigRat& vN) {
  BigInt top;
  mpz_fdiv_q(top.get_mpz_t(), vN.get_num_mpz_t(), vN.get_den_mpz_t());
  if (top == vN) top -= 1;  // strict base inequality
  for (int tries = 0; tries < 64 && sgn(top) > 0; ++tries, top -= 1) {
    BoundSpec s{RatFunc::constant(BigRat(top)), BoundSide::Lower, 0, N};
    InductionCertificate c = induction_step(seq, s);
    if (c.certified()) return c;
  }
  return std::nullopt;
}

}  // namespace

InductionCertificate induction_step(Sequence& seq, const BoundSpec& requested) {
  BoundSpec spec = requested;
  // A constant bound does not depend on the shift; store the canonical 0.
  if (is_constant(spec.bound)) spec.shift = 0;
  const Order2Recurrence& rec = seq.recurrence();
  const RatioMap map = ratio_map(rec);
  const long N = spec.base_index;
  if (N < map.valid_from) {
    throw SpecInvalid("base index " + std::to_string(N) +
                      " precedes the ratio map's first index " +
                      std::to_string(map.valid_from));
  }
  if (auto pole = pole_on_tail(spec.bound.den(), N + spec.shift)) {
    throw SpecInvalid("bound " + spec.bound.to_string() + " has a pole at n = " +
                      std::to_string(*pole));
  }
  if (spec.bound.is_zero()) throw SpecInvalid("the zero bound is not positive");
  if (map.B.is_zero()) {
    throw SpecInvalid(rec.name + " has c0 = 0, so its ratio map has no B(n) > 0 term");
  }

  InductionCertificate cert;
  cert.recurrence = rec;
  cert.map = map;
  cert.spec = spec;
  cert.base.n = N;
  cert.base.ratio = seq.ratio(N);
  cert.base.bound_value = spec.bound(BigInt(N + spec.shift));
  cert.base.holds = base_holds(spec.side, cert.base.ratio, cert.base.bound_value);

  const RatFunc step = step_quantity(map, spec);
  cert.step_numerator = step.num();
  cert.step_denominator = step.den();
  cert.side_conditions = expected_side_conditions(map, spec, step);
  if (step.is_zero()) {
    // E = 0 gives no strict margin.
    cert.step_positivity = positive_on_integer_tail(PolyZ{-1}, N);
    cert.step_positivity.polynomial = PolyZ{};
  } else {
    cert.step_positivity = positive_on_integer_tail(step.num(), N);
  }

  if (spec.side == BoundSide::Upper) {
    if (auto lower = positive_lower_bound(seq, N, cert.base.ratio)) {
      cert.ratio_positivity.push_back(std::move(*lower));
    } else {
      cert.note = "no positive constant lower bound for the ratio could be certified";
    }
  }
  cert.conclusion = conclude(cert);
  if (cert.conclusion == Conclusion::StepFails && cert.note.empty()) {
    cert.note = cert.step_positivity.witness
                    ? "step quantity not positive at n = " +
                          std::to_string(*cert.step_positivity.witness)
                    : "a side condition is not certified";
  }
  return cert;
}

RecheckResult recheck(const InductionCertificate& cert) {
  try {
    validate(cert.recurrence);
    if ((cert.recurrence.name == "clf" && !(cert.recurrence == clf())) ||
        (cert.recurrence.name == "flf" && !(cert.recurrence == flf()))) {
      return RecheckResult::fail("recurrence named " + cert.recurrence.name +
                                 " differs from the built-in definition");
    }
    const RatioMap map = ratio_map(cert.recurrence);
    if (!(map == cert.map)) return RecheckResult::fail("ratio map does not match the recurrence");
    const BoundSpec& spec = cert.spec;
    if (is_constant(spec.bound) && spec.shift != 0) {
      return RecheckResult::fail("constant bound with a nonzero shift");
    }
    const long N = spec.base_index;
    if (N < map.valid_from) return RecheckResult::fail("base index before the ratio map");
    if (pole_on_tail(spec.bound.den(), N + spec.shift)) {
      return RecheckResult::fail("bound has a pole on the tail");
    }
    if (cert.base.n != N) return RecheckResult::fail("base index mismatch");
    if (cert.base.ratio != ratio_by_iteration(cert.recurrence, N)) {
      return RecheckResult::fail("base ratio does not match the recurrence");
    }
    if (cert.base.bound_value != spec.bound(BigInt(N + spec.shift))) {
      return RecheckResult::fail("base bound value mismatch");
    }
    if (cert.base.holds != base_holds(spec.side, cert.base.ratio, cert.base.bound_value)) {
      return RecheckResult::fail("base verdict mismatch");
    }

    const RatFunc step = step_quantity(map, spec);
    if (!(cert.step_numerator == step.num()) || !(cert.step_denominator == step.den())) {
      return RecheckResult::fail("step quantity does not match A - B/b - b'");
    }

    const auto expected = expected_side_conditions(map, spec, step);
    if (cert.side_conditions.size() != expected.size()) {
      return RecheckResult::fail("side condition list incomplete");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& got = cert.side_conditions[i];
      if (got.name != expected[i].name ||
          !(got.certificate.polynomial == expected[i].certificate.polynomial) ||
          got.certificate.tail_start != N) {
        return RecheckResult::fail("side condition '" + expected[i].name + "' mismatch");
      }
      if (auto r = recheck(got.certificate); !r) {
        return RecheckResult::fail(got.name + ": " + r.reason);
      }
    }

    const auto& sp = cert.step_positivity;
    if (step.is_zero()) {
      if (sp.certified) return RecheckResult::fail("zero step quantity cannot be certified");
    } else {
      if (!(sp.polynomial == step.num()) || sp.tail_start != N) {
        return RecheckResult::fail("step positivity certificate is for another polynomial");
      }
      if (auto r = recheck(sp); !r) return RecheckResult::fail("step: " + r.reason);
    }

    if (spec.side == BoundSide::Lower && !cert.ratio_positivity.empty()) {
      return RecheckResult::fail("lower bound carries a ratio positivity certificate");
    }
    for (const auto& inner : cert.ratio_positivity) {
      if (!(inner.recurrence == cert.recurrence)) {
        return RecheckResult::fail("ratio positivity certificate for another recurrence");
      }
      if (inner.spec.side != BoundSide::Lower || inner.spec.base_index > N) {
        return RecheckResult::fail("ratio positivity certificate does not cover the tail");
      }
      if (!is_constant(inner.spec.bound)) {
        return RecheckResult::fail("ratio positivity needs a constant bound with shift 0");
      }
      if (auto r = recheck(inner); !r) return RecheckResult::fail("ratio positivity: " + r.reason);
    }
    if (cert.ratio_positivity.size() > 1) {
      return RecheckResult::fail("more than one ratio positivity certificate");
    }
    if (cert.conclusion != conclude(cert)) return RecheckResult::fail("conclusion mismatch");
    return {};
  } catch (const Error& e) {
    return RecheckResult::fail(e.what());
  }
}

PropertyReport check_bound_pointwise(Sequence& seq, const BoundSpec& spec,
                                     long n_lo, long n_hi) {
  seq.extend_to(n_hi);
  const std::string name = seq.name() + ".ratio_" + to_string(spec.side) + "_bound";
  return run_indexwise(name, n_lo, n_hi, 1, [&](long n) {
    const BigRat v = seq.ratio(n);
    const BigRat b = spec.bound(BigInt(n + spec.shift));
    return IndexResult{n,
                       base_holds(spec.side, v, b) ? Verdict::HoldsStrictly
                                                   : Verdict::Fails,
                       DecisionPath::exact()};
  });
}

std::vector<BoundVerification> verify_ratio_bounds(
    Sequence& seq, const std::vector<BoundSpec>& specs, long span) {
  if (specs.empty()) throw DomainError("no bound specifications given");
  std::vector<BoundVerification> out;
  for (const auto& spec : specs) {
    InductionCertificate cert = induction_step(seq, spec);
    PropertyReport pw =
        check_bound_pointwise(seq, spec, spec.base_index, spec.base_index + span);
    if (cert.certified() && !pw.holds()) {
      throw SoundnessError(seq.name() + ": certified " + to_string(spec.side) +
                           " bound " + spec.bound.to_string() +
                           " fails pointwise at n = " +
                           std::to_string(*pw.first_failure));
    }
    out.push_back({std::move(cert), std::move(pw)});
  }
  return out;
}

std::optional<InductionCertificate> smallest_certified_base(
    Sequence& seq, const RatFunc& bound, BoundSide side, long shift, long lo,
    long hi) {
  for (long N = lo; N <= hi; ++N) {
    InductionCertificate c = induction_step(seq, BoundSpec{bound, side, shift, N});
    if (c.certified()) return c;
  }
  return std::nullopt;
}

}  // namespace logbehave
