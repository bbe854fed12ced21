#pragma once

// Certificates for ratio bounds proved by one-step induction through the
// ratio map v(n+1) = A(n) - B(n)/v(n), and for positivity of integer
// polynomials on integer tails {n >= N}.
//
// A certificate carries everything needed to re-derive its verdict; recheck()
// does so without calling the prover.

#include <optional>
#include <string>
#include <vector>

#include "logbehave/holonomic.hpp"
#include "logbehave/logbehavior.hpp"
#include "logbehave/poly.hpp"

namespace logbehave {

enum class PositivityMethod { ShiftedCoefficients, RootBoundSweep };

std::string to_string(PositivityMethod m);

struct PositivityCertificate {
  PolyZ polynomial;
  long tail_start = 0;
  PositivityMethod method = PositivityMethod::ShiftedCoefficients;
  // ShiftedCoefficients: coefficients of p(x + tail_start).
  std::vector<BigInt> shifted;
  // RootBoundSweep: Cauchy bound and p(n) for n = tail_start..root_bound.
  BigInt root_bound;
  std::vector<std::pair<long, BigInt>> evaluations;
  bool certified = false;
  // Some n >= tail_start with p(n) <= 0, when not certified.
  std::optional<long> witness;

  bool operator==(const PositivityCertificate&) const = default;
};

// Certified iff p(n) > 0 for every integer n >= N. Tries nonnegative
// coefficients of p(x + N) with a positive constant term first, then a
// Cauchy-bound sweep. Sweeps longer than max_sweep points give up without
// a verdict (certified = false, no witness).
PositivityCertificate positive_on_integer_tail(const PolyZ& p, long N,
                                               long max_sweep = 10'000'000);

struct RecheckResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static RecheckResult fail(std::string why) { return {false, std::move(why)}; }
};

RecheckResult recheck(const PositivityCertificate& cert);

enum class BoundSide { Lower, Upper };

std::string to_string(BoundSide s);

// Claim: v(n) > bound(n + shift) (Lower) or v(n) < bound(n + shift) (Upper)
// for every n >= base_index.
struct BoundSpec {
  RatFunc bound;
  BoundSide side = BoundSide::Lower;
  long shift = 0;
  long base_index = 1;

  bool operator==(const BoundSpec&) const = default;
};

enum class Conclusion { Certified, BaseFails, StepFails };

std::string to_string(Conclusion c);

struct BaseCase {
  long n = 0;
  BigRat ratio;
  BigRat bound_value;
  bool holds = false;

  bool operator==(const BaseCase&) const = default;
};

struct SideCondition {
  std::string name;
  PositivityCertificate certificate;

  bool operator==(const SideCondition&) const = default;
};

struct InductionCertificate {
  Order2Recurrence recurrence;
  RatioMap map;
  BoundSpec spec;
  BaseCase base;
  // B(n) > 0 (so A - B/v increases with v), A's denominator, positivity of
  // the bound on the tail and of the step denominator.
  std::vector<SideCondition> side_conditions;
  // The step quantity E(n) = +-(A(n) - B(n)/b(n+s) - b(n+s+1)), reduced.
  PolyZ step_numerator;
  PolyZ step_denominator;
  PositivityCertificate step_positivity;
  // Upper bounds need v(n) > 0 on the tail; this holds one Lower
  // certificate with a positive bound and a base index <= ours.
  std::vector<InductionCertificate> ratio_positivity;
  Conclusion conclusion = Conclusion::StepFails;
  std::string note;

  bool certified() const { return conclusion == Conclusion::Certified; }
};

bool operator==(const InductionCertificate& a, const InductionCertificate& b);

// One-step induction for spec on seq's ratio map. Throws SpecInvalid if the
// bound has a pole at an integer m >= base_index + shift.
InductionCertificate induction_step(Sequence& seq, const BoundSpec& spec);

// Re-derives every field of the certificate from the recurrence and the
// bound alone and compares.
RecheckResult recheck(const InductionCertificate& cert);

struct BoundVerification {
  InductionCertificate certificate;
  PropertyReport pointwise;
};

// induction_step per spec plus an exact pointwise check on
// [base, base + span]. A certified bound that fails pointwise raises
// SoundnessError.
std::vector<BoundVerification> verify_ratio_bounds(
    Sequence& seq, const std::vector<BoundSpec>& specs, long span = 200);

PropertyReport check_bound_pointwise(Sequence& seq, const BoundSpec& spec,
                                     long n_lo, long n_hi);

// Smallest base index in [lo, hi] at which the one-step induction closes.
std::optional<InductionCertificate> smallest_certified_base(
    Sequence& seq, const RatFunc& bound, BoundSide side, long shift, long lo,
    long hi);

}  // namespace logbehave
