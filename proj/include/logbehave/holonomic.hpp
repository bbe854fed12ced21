#pragma once

// Order-2 P-recursive sequences
//   c2(n) a_{n+1} = c1(n) a_n - c0(n) a_{n-1},   n >= first_valid_n,
// with exact term computation, the induced ratio recurrence and a
// checksummed on-disk term cache.

#include <filesystem>
#include <shared_mutex>
#include <string>
#include <vector>

#include "logbehave/exactnum.hpp"
#include "logbehave/poly.hpp"

namespace logbehave {

struct Order2Recurrence {
  std::string name;
  PolyZ c2;
  PolyZ c1;
  PolyZ c0;
  BigInt a0;
  BigInt a1;
  long first_valid_n = 1;

  bool operator==(const Order2Recurrence&) const = default;
};

// Catalan-Larcombe-French: (n+1)^2 P_{n+1} = 8(3n^2+3n+1) P_n - 128 n^2 P_{n-1}.
Order2Recurrence clf();
// Fennessey-Larcombe-French:
//   n(n+1)^2 V_{n+1} = 8n(3n^2+5n+1) V_n - 128(n-1)(n+1)^2 V_{n-1}.
// c2 vanishes at n = 0, so the relation is only used from n = 1.
Order2Recurrence flf();

// Throws DomainError when the recurrence cannot be iterated at all.
void validate(const Order2Recurrence& rec);

struct SequenceStore {
  std::string name;
  std::vector<BigInt> terms;  // dense prefix a_0..a_highest

  long highest_index() const { return static_cast<long>(terms.size()) - 1; }
  bool operator==(const SequenceStore&) const = default;
};

// Exact a_n; extends the store densely. Every division by c2(k) must be
// exact (NonIntegralTerm otherwise); InvalidIndex when c2(k) = 0 or the
// relation is not defined at a needed step.
BigInt term(const Order2Recurrence& rec, long n, SequenceStore& store);

// a_n / a_{n-1}, reduced.
BigRat ratio(const Order2Recurrence& rec, long n, SequenceStore& store);

// v(n+1) = A(n) - B(n) / v(n) for n >= valid_from, with A = c1/c2 and
// B = c0/c2 reduced.
struct RatioMap {
  RatFunc A;
  RatFunc B;
  long valid_from = 1;

  BigRat next(long n, const BigRat& v) const;
  bool operator==(const RatioMap&) const = default;
};

RatioMap ratio_map(const Order2Recurrence& rec);

// Text cache:
//   SEQCACHE v1 <name>
//   <n> <decimal> <crc32 of "<n> <decimal>", 8 hex digits>
//   ...
//   END <highest_index>
// Written atomically through a temporary file.
void save_store(const SequenceStore& store, const std::filesystem::path& path);
SequenceStore load_store(const std::filesystem::path& path);

// A recurrence with its term store, shared between threads. Extension takes
// the writer lock; reads of the dense prefix take the reader lock.
class Sequence {
 public:
  explicit Sequence(Order2Recurrence rec);
  Sequence(Order2Recurrence rec, SequenceStore store);

  const Order2Recurrence& recurrence() const { return rec_; }
  const std::string& name() const { return rec_.name; }

  void extend_to(long n);
  BigInt term(long n);
  BigRat ratio(long n);
  SequenceStore snapshot() const;

 private:
  Order2Recurrence rec_;
  mutable std::shared_mutex mu_;
  SequenceStore store_;
};

}  // namespace logbehave
