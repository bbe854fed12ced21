#include "logbehave/logbehavior.hpp"

#include <algorithm>
#include <thread>

#include "logbehave/errors.hpp"

namespace logbehave {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsStrictly:
      return "HoldsStrictly";
    case Verdict::Holds:
      return "Holds";
    default:
      return "Fails";
  }
}

bool PropertyReport::holds() const {
  if (partial) return false;
  return std::none_of(results.begin(), results.end(), [](const IndexResult& r) {
    return r.verdict == Verdict::Fails;
  });
}

bool PropertyReport::holds_strictly() const {
  if (partial) return false;
  return std::all_of(results.begin(), results.end(), [](const IndexResult& r) {
    return r.verdict == Verdict::HoldsStrictly;
  });
}

std::size_t PropertyReport::interval_decided() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const IndexResult& r) {
        return r.path.kind == DecisionPath::Kind::Interval;
      }));
}

std::size_t PropertyReport::exact_decided() const {
  return results.size() - interval_decided();
}

void PropertyReport::merge(const PropertyReport& later) {
  if (results.empty() && !partial) {
    n_lo = later.n_lo;
  }
  n_hi = later.n_hi;
  results.insert(results.end(), later.results.begin(), later.results.end());
  if (later.partial) {
    partial = true;
    if (!partial_reason.empty()) partial_reason += "; ";
    partial_reason += later.partial_reason;
  }
  finalize();
}

void PropertyReport::finalize() {
  first_failure.reset();
  for (const auto& r : results) {
    if (r.verdict == Verdict::Fails) {
      first_failure = r.n;
      break;
    }
  }
}

PropertyReport run_indexwise(const std::string& property, long lo, long hi,
                             unsigned jobs,
                             const std::function<IndexResult(long)>& fn) {
  if (lo > hi) {
    throw DomainError(property + ": empty range [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  PropertyReport report{property, lo, hi, {}, {}, false, {}};
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  report.results.resize(count);
  const std::size_t workers =
      std::clamp<std::size_t>(jobs == 0 ? 1 : jobs, 1, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      report.results[i] = fn(lo + static_cast<long>(i));
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t end = std::min(count, (w + 1) * chunk);
          for (std::size_t i = w * chunk; i < end; ++i) {
            report.results[i] = fn(lo + static_cast<long>(i));
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  report.finalize();
  return report;
}

namespace {

Verdict verdict_from(int c, bool strict) {
  if (c > 0) return Verdict::HoldsStrictly;
  if (c == 0) return strict ? Verdict::Fails : Verdict::Holds;
  return Verdict::Fails;
}

Verdict verdict_from(Ordering o, bool strict) {
  return verdict_from(o == Ordering::Greater ? 1 : (o == Ordering::Equal ? 0 : -1),
                      strict);
}

void require_lo(const char* what, long n_lo, long min) {
  if (n_lo < min) {
    throw DomainError(std::string(what) + " needs n_lo >= " + std::to_string(min));
  }
}

// sign of a_n^2 - a_{n-1} a_{n+1}
int concavity_sign(Sequence& seq, long n) {
  const BigInt prev = seq.term(n - 1);
  const BigInt cur = seq.term(n);
  const BigInt next = seq.term(n + 1);
  return cmp(BigInt(cur * cur), BigInt(prev * next));
}

std::vector<BigInt> positive_terms(Sequence& seq, long lo, long hi) {
  seq.extend_to(hi);
  std::vector<BigInt> t;
  t.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) {
    BigInt v = seq.term(k);
    if (sgn(v) <= 0) {
      throw NonPositiveTerm(seq.name() + ": term " + std::to_string(k) +
                            " is not positive");
    }
    t.push_back(std::move(v));
  }
  return t;
}

}  // namespace

PropertyReport check_log_concave(Sequence& seq, long n_lo, long n_hi,
                                 bool strict, const CheckOptions& opt) {
  require_lo("log-concavity", n_lo, 1);
  seq.extend_to(n_hi + 1);
  return run_indexwise(seq.name() + ".log_concave", n_lo, n_hi, opt.jobs,
                       [&](long n) {
                         return IndexResult{n,
                                            verdict_from(concavity_sign(seq, n), strict),
                                            DecisionPath::exact()};
                       });
}

PropertyReport check_log_convex(Sequence& seq, long n_lo, long n_hi,
                                bool strict, const CheckOptions& opt) {
  require_lo("log-convexity", n_lo, 1);
  seq.extend_to(n_hi + 1);
  return run_indexwise(seq.name() + ".log_convex", n_lo, n_hi, opt.jobs,
                       [&](long n) {
                         return IndexResult{n,
                                            verdict_from(-concavity_sign(seq, n), strict),
                                            DecisionPath::exact()};
                       });
}

PropertyReport check_ratio_monotone(Sequence& seq, long n_lo, long n_hi,
                                    Direction dir, bool strict,
                                    const CheckOptions& opt) {
  require_lo("ratio monotonicity", n_lo, 1);
  seq.extend_to(n_hi + 1);
  const bool inc = dir == Direction::Increasing;
  return run_indexwise(
      seq.name() + (inc ? ".ratio_increasing" : ".ratio_decreasing"), n_lo,
      n_hi, opt.jobs, [&](long n) {
        const int c = cmp(seq.ratio(n + 1), seq.ratio(n));
        const Verdict v = verdict_from(inc ? c : -c, strict);
        const int cross = inc ? -concavity_sign(seq, n) : concavity_sign(seq, n);
        if (v != verdict_from(cross, strict)) {
          throw SoundnessError(seq.name() + ": ratio monotonicity and " +
                               (inc ? "log-convexity" : "log-concavity") +
                               " disagree at n = " + std::to_string(n));
        }
        return IndexResult{n, v, DecisionPath::exact()};
      });
}

PropertyReport check_root_log_concave(Sequence& seq, long n_lo, long n_hi,
                                      const CheckOptions& opt, bool strict) {
  require_lo("n-th root log-concavity", n_lo, 2);
  const auto terms = positive_terms(seq, n_lo - 1, n_hi + 1);
  auto at = [&](long k) -> const BigInt& {
    return terms[static_cast<std::size_t>(k - (n_lo - 1))];
  };
  return run_indexwise(
      seq.name() + ".root_log_concave", n_lo, n_hi, opt.jobs, [&](long n) {
        const auto un = static_cast<unsigned long>(n);
        const PowerTerm lhs[] = {{at(n), 2 * (un * un - 1)}};
        const PowerTerm rhs[] = {{at(n - 1), un * (un + 1)},
                                 {at(n + 1), un * (un - 1)}};
        const auto c = cmp_power_products(lhs, rhs, opt.ladder);
        return IndexResult{n, verdict_from(c.order, strict), c.path};
      });
}

PropertyReport check_root_monotone(Sequence& seq, long n_lo, long n_hi,
                                   const CheckOptions& opt) {
  require_lo("n-th root monotonicity", n_lo, 1);
  const auto terms = positive_terms(seq, n_lo, n_hi + 1);
  auto at = [&](long k) -> const BigInt& {
    return terms[static_cast<std::size_t>(k - n_lo)];
  };
  return run_indexwise(
      seq.name() + ".root_increasing", n_lo, n_hi, opt.jobs, [&](long n) {
        const auto un = static_cast<unsigned long>(n);
        const PowerTerm lhs[] = {{at(n + 1), un}};
        const PowerTerm rhs[] = {{at(n), un + 1}};
        const auto c = cmp_power_products(lhs, rhs, opt.ladder);
        return IndexResult{n, verdict_from(c.order, true), c.path};
      });
}

}  // namespace logbehave
