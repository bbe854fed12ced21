#pragma once

// End-to-end pipelines for the log-behavior results on the
// Catalan-Larcombe-French (P_n) and Fennessey-Larcombe-French (V_n)
// sequences, built from pointwise exact sweeps and induction certificates.

#include <string>
#include <utility>
#include <vector>

#include "logbehave/induction.hpp"
#include "logbehave/logbehavior.hpp"

namespace logbehave {

// Display tags attached to every sub-result; one per displayed relation.
namespace display {
inline constexpr const char* kClfRecurrence = "clf-recurrence";
inline constexpr const char* kFlfRecurrence = "flf-recurrence";
inline constexpr const char* kClfRootLogConcave = "clf-root-log-concavity";
inline constexpr const char* kFlfRootLogConcave = "flf-root-log-concavity";
inline constexpr const char* kClfBoundF = "clf-bound-f";
inline constexpr const char* kClfRatioMap = "clf-ratio-map";
inline constexpr const char* kClfRatioBounds = "clf-ratio-bounds";
inline constexpr const char* kClfClearedForm = "clf-cleared-form";
inline constexpr const char* kClfScaledVsRn = "clf-scaled-term-below-rn";
inline constexpr const char* kFlfBoundH = "flf-bound-h";
inline constexpr const char* kFlfLowerBound = "flf-lower-ratio-bound";
inline constexpr const char* kFlfUpperBound = "flf-upper-ratio-bound";
inline constexpr const char* kFlfRatioMap = "flf-ratio-map";
inline constexpr const char* kFlfClearedForm = "flf-cleared-form";
inline constexpr const char* kFlfHPower = "flf-h-power-exceeds-term";
inline constexpr const char* kFlfBinomialBound = "flf-central-binomial-bound";
inline constexpr const char* kSasvariSign = "sasvari-exponent-sign";
inline constexpr const char* kBinomialPiBound = "central-binomial-pi-bound";
inline constexpr const char* kFlfBelow16 = "flf-below-16-power";
inline constexpr const char* kHExceeds16 = "h-exceeds-16";
inline constexpr const char* kRootMonotone = "root-monotonicity";

// Every tag a complete run must cover.
const std::vector<std::string>& all();
}  // namespace display

// f(n) = 16(n-1)/n
RatFunc clf_bound();
// h(n) = 16(n^3-n^2+1)/(n^3-n^2)
RatFunc flf_bound();

struct SubResult {
  std::string display;
  std::string description;
  long n_lo = 0;
  long n_hi = 0;
  bool holds = false;
  std::string method;
  std::vector<std::string> witnesses;

  bool operator==(const SubResult&) const = default;
};

struct TheoremReport {
  std::string id;
  std::vector<SubResult> parts;
  bool holds = false;
  double seconds = 0;
  std::vector<std::string> notes;
  std::vector<InductionCertificate> certificates;

  void add(SubResult r) { parts.push_back(std::move(r)); }
  // holds = conjunction of parts.
  void finalize();
};

// Shared state: the two sequences, options and the pi precision.
class PaperContext {
 public:
  explicit PaperContext(CheckOptions options = {}, unsigned pi_bits = 64);
  PaperContext(SequenceStore clf_store, SequenceStore flf_store,
               CheckOptions options = {}, unsigned pi_bits = 64);

  Sequence& clf_seq() { return clf_; }
  Sequence& flf_seq() { return flf_; }
  const CheckOptions& options() const { return options_; }
  PiEnclosure pi() const { return pi_enclosure(pi_bits_); }

 private:
  Sequence clf_;
  Sequence flf_;
  CheckOptions options_;
  unsigned pi_bits_;
};

struct ScaledPair {
  BigRat l;
  BigRat r;
};

// l_n = P_n / 16^n and
// r_n = ((n-2)(n+1)/((n-1)n))^{n(n-1)/2} ((n-2)/(n-1))^n, for n >= 3.
ScaledPair ln_rn(Sequence& clf_seq, long n);
BigRat rn_closed_form(long n);
// (1 - 1/C(n,2))^{C(n,2)} (1 - 1/(n-1))^{n-1} (1 - 1/(n-1))
BigRat rn_product_form(long n);
bool rn_product_identity(long n);
PropertyReport check_rn_product_identity(long n_lo, long n_hi);

// (1 - 1/(n+1))^{n+1} > (1 - 1/n)^n at each n.
PropertyReport euler_seq_increasing(long n_lo, long n_hi);

// Index n compares l_{n+1} < l_n; cross-checked against ratio(n+1) < 16.
PropertyReport claim_ln_decreasing(Sequence& clf_seq, long n_lo, long n_hi);
// Index n compares r_{n+1} > r_n.
PropertyReport claim_rn_increasing(long n_lo, long n_hi);
// Index n: l_n < r_n.
PropertyReport check_ln_below_rn(Sequence& clf_seq, long n_lo, long n_hi);
// Smallest n in [n_lo, n_hi] with l_n < r_n.
std::optional<long> ln_rn_crossover(Sequence& clf_seq, long n_lo, long n_hi);

// C(2n, n) by the multiplicative formula.
BigInt binom_central(long n);

// V_n < (2n+1) C(2n,n)^2
PropertyReport check_Vu1(Sequence& flf_seq, long n_lo, long n_hi);

struct SignReport {
  PropertyReport pointwise;
  PositivityCertificate certificate;
};

// -1/(8n) + 1/(192 n^3) < 0 per index, and 24n^2 - 1 > 0 on n >= 1.
SignReport sasvari_exponent_sign(long n_lo, long n_hi);

// pi n C(2n,n)^2 < 16^n, proved with the upper end of the enclosure.
PropertyReport check_nfu(long n_lo, long n_hi, const PiEnclosure& pi);

// Per index: V_n pi n < (2n+1) 16^n (upper end of pi), 2n+1 < pi n (lower
// end), and V_n < 16^n.
PropertyReport check_Vu2(Sequence& flf_seq, long n_lo, long n_hi,
                         const PiEnclosure& pi);

// Per index: V_n < (2n+1)C^2 and pi n C^2 < 16^n must imply V_n pi n <
// (2n+1) 16^n, each decided separately by exact arithmetic.
PropertyReport check_binomial_chain(Sequence& flf_seq, long n_lo, long n_hi,
                                    const PiEnclosure& pi);

struct HExceeds16Report {
  PropertyReport pointwise;
  // h(n) - 16 = numerator / denominator
  PolyZ numerator;
  PolyZ denominator;
  PositivityCertificate numerator_certificate;
  PositivityCertificate denominator_certificate;
};

HExceeds16Report h_gt_16(long n_lo, long n_hi);

// 16^n (n^3-n^2+1)^n > V_n (n^3-n^2)^n, i.e. h(n)^n > V_n.
PropertyReport check_vuh(Sequence& flf_seq, long n_lo, long n_hi,
                         const CheckOptions& opt = {});

// A(n) - B(n)/v(n) = v(n+1) exactly for n in [n_lo, n_hi].
PropertyReport check_ratio_map_fidelity(Sequence& seq, long n_lo, long n_hi);

TheoremReport theorem_clf_root_log_concavity(PaperContext& ctx, long n_hi);
TheoremReport theorem_flf_root_log_concavity(PaperContext& ctx, long n_hi);
// gap_hi: last index of the ratio gap evidence.
TheoremReport proposition_root_monotonicity(PaperContext& ctx, long n_hi,
                                            long gap_hi = 2000);

}  // namespace logbehave
