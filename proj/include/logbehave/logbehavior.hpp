#pragma once

// Exact range checkers for log-concavity, log-convexity, ratio
// monotonicity and the n-th root properties of a sequence.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logbehave/exactnum.hpp"
#include "logbehave/holonomic.hpp"

namespace logbehave {

enum class Verdict { HoldsStrictly, Holds, Fails };

std::string to_string(Verdict v);

struct IndexResult {
  long n = 0;
  Verdict verdict = Verdict::Fails;
  DecisionPath path;

  bool operator==(const IndexResult&) const = default;
};

struct PropertyReport {
  std::string property;
  long n_lo = 0;
  long n_hi = 0;
  std::vector<IndexResult> results;
  std::optional<long> first_failure;
  bool partial = false;
  std::string partial_reason;

  bool holds() const;
  bool holds_strictly() const;
  std::size_t interval_decided() const;
  std::size_t exact_decided() const;
  // Appends a later, adjacent range. Deterministic and associative.
  void merge(const PropertyReport& later);
  // Recomputes first_failure from the per-index verdicts.
  void finalize();

  bool operator==(const PropertyReport&) const = default;
};

struct CheckOptions {
  PrecisionLadder ladder;
  unsigned jobs = 1;
};

// Runs fn(n) for n in [lo, hi] in `jobs` contiguous partitions and gathers
// the results in index order.
PropertyReport run_indexwise(const std::string& property, long lo, long hi,
                             unsigned jobs,
                             const std::function<IndexResult(long)>& fn);

// a_n^2 vs a_{n-1} a_{n+1}
PropertyReport check_log_concave(Sequence& seq, long n_lo, long n_hi,
                                 bool strict, const CheckOptions& opt = {});
PropertyReport check_log_convex(Sequence& seq, long n_lo, long n_hi,
                                bool strict, const CheckOptions& opt = {});

enum class Direction { Increasing, Decreasing };

// Compares a_{n+1}/a_n against a_n/a_{n-1} for n in [n_lo, n_hi] and
// cross-checks every index against the matching log-convexity (increasing)
// or log-concavity (decreasing) verdict; a mismatch is a SoundnessError.
PropertyReport check_ratio_monotone(Sequence& seq, long n_lo, long n_hi,
                                    Direction dir, bool strict = false,
                                    const CheckOptions& opt = {});

// a_n^{2(n^2-1)} vs a_{n-1}^{n(n+1)} a_{n+1}^{n(n-1)}: the cleared form of
// (a_n^{1/n})^2 > a_{n-1}^{1/(n-1)} a_{n+1}^{1/(n+1)}. Requires n_lo >= 2.
PropertyReport check_root_log_concave(Sequence& seq, long n_lo, long n_hi,
                                      const CheckOptions& opt = {},
                                      bool strict = true);

// a_{n+1}^n vs a_n^{n+1}: the cleared form of a_{n+1}^{1/(n+1)} > a_n^{1/n}.
PropertyReport check_root_monotone(Sequence& seq, long n_lo, long n_hi,
                                   const CheckOptions& opt = {});

}  // namespace logbehave
