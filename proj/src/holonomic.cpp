#include "logbehave/holonomic.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "logbehave/errors.hpp"

namespace logbehave {

Order2Recurrence clf() {
  return {"clf", PolyZ{1, 2, 1}, PolyZ{8, 24, 24}, PolyZ{0, 0, 128},
          BigInt(1), BigInt(8), 1};
}

Order2Recurrence flf() {
  return {"flf",           PolyZ{0, 1, 2, 1}, PolyZ{0, 8, 40, 24},
          PolyZ{-128, -128, 128, 128}, BigInt(1), BigInt(8), 1};
}

void validate(const Order2Recurrence& rec) {
  if (rec.name.empty()) throw DomainError("recurrence without a name");
  if (rec.c2.is_zero()) throw DomainError("recurrence " + rec.name + ": c2 is zero");
  if (rec.first_valid_n < 1) {
    throw DomainError("recurrence " + rec.name + ": first_valid_n must be >= 1");
  }
}

BigInt term(const Order2Recurrence& rec, long n, SequenceStore& store) {
  if (n < 0) throw InvalidIndex("negative index " + std::to_string(n));
  if (store.terms.empty()) store.terms.push_back(rec.a0);
  if (store.terms.size() == 1 && n >= 1) store.terms.push_back(rec.a1);
  while (store.highest_index() < n) {
    const long k = store.highest_index();  // computing a_{k+1}
    if (k < rec.first_valid_n) {
      throw InvalidIndex(rec.name + ": relation undefined at n = " +
                         std::to_string(k));
    }
    const BigInt nk(k);
    const BigInt d = rec.c2(nk);
    if (sgn(d) == 0) {
      throw InvalidIndex(rec.name + ": c2 vanishes at n = " + std::to_string(k));
    }
    const BigInt rhs = rec.c1(nk) * store.terms[static_cast<std::size_t>(k)] -
                       rec.c0(nk) * store.terms[static_cast<std::size_t>(k - 1)];
    BigInt q;
    BigInt r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rhs.get_mpz_t(), d.get_mpz_t());
    if (sgn(r) != 0) {
      throw NonIntegralTerm(rec.name + ": c2(" + std::to_string(k) +
                            ") does not divide the right-hand side for term " +
                            std::to_string(k + 1));
    }
    store.terms.push_back(std::move(q));
  }
  return store.terms[static_cast<std::size_t>(n)];
}

BigRat ratio(const Order2Recurrence& rec, long n, SequenceStore& store) {
  if (n < 1) throw InvalidIndex("ratio needs n >= 1, got " + std::to_string(n));
  const BigInt hi = term(rec, n, store);
  const BigInt lo = store.terms[static_cast<std::size_t>(n - 1)];
  if (sgn(lo) == 0) {
    throw ZeroDenominator(rec.name + ": term " + std::to_string(n - 1) + " is zero");
  }
  return make_rat(hi, lo);
}

BigRat RatioMap::next(long n, const BigRat& v) const {
  if (sgn(v) == 0) throw ZeroDenominator("ratio map applied to a zero ratio");
  const BigInt nn(n);
  return A(nn) - B(nn) / v;
}

RatioMap ratio_map(const Order2Recurrence& rec) {
  validate(rec);
  return RatioMap{RatFunc(rec.c1, rec.c2), RatFunc(rec.c0, rec.c2),
                  rec.first_valid_n};
}

namespace {

std::string crc_hex(const std::string& s) {
  const uLong crc = crc32(crc32(0L, Z_NULL, 0),
                          reinterpret_cast<const Bytef*>(s.data()),
                          static_cast<uInt>(s.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", crc & 0xffffffffUL);
  return buf;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

void save_store(const SequenceStore& store, const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << "SEQCACHE v1 " << store.name << "\n";
    for (std::size_t i = 0; i < store.terms.size(); ++i) {
      const std::string prefix = std::to_string(i) + " " + store.terms[i].get_str();
      out << prefix << " " << crc_hex(prefix) << "\n";
    }
    out << "END " << store.highest_index() << "\n";
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

SequenceStore load_store(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::string line;
  long lineno = 1;
  if (!std::getline(in, line)) throw FormatError("empty cache file", lineno);
  std::istringstream header(line);
  std::string magic;
  std::string version;
  SequenceStore store;
  if (!(header >> magic >> version >> store.name) || magic != "SEQCACHE" ||
      version != "v1") {
    throw FormatError("bad header '" + line + "'", lineno);
  }
  bool ended = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (ended) {
      if (line.empty()) continue;
      throw FormatError("content after END", lineno);
    }
    std::istringstream fields(line);
    std::string a;
    std::string b;
    std::string c;
    std::string extra;
    fields >> a >> b;
    if (a == "END") {
      if (!all_digits(b) || std::stol(b) != store.highest_index() || (fields >> extra)) {
        throw FormatError("END index does not match the stored terms", lineno);
      }
      ended = true;
      continue;
    }
    if (!(fields >> c) || (fields >> extra) || !all_digits(a) || !all_digits(b)) {
      throw FormatError("expected '<n> <digits> <crc32>'", lineno);
    }
    if (std::stol(a) != static_cast<long>(store.terms.size())) {
      throw FormatError("indices must increase from 0 without gaps", lineno);
    }
    if (crc_hex(a + " " + b) != c) {
      throw ChecksumMismatch("checksum mismatch for term " + a, lineno);
    }
    store.terms.emplace_back(b, 10);
  }
  if (!ended) throw FormatError("missing END line", lineno);
  if (store.terms.empty()) throw FormatError("cache holds no terms", lineno);
  return store;
}

Sequence::Sequence(Order2Recurrence rec) : rec_(std::move(rec)) {
  validate(rec_);
  store_.name = rec_.name;
}

Sequence::Sequence(Order2Recurrence rec, SequenceStore store)
    : rec_(std::move(rec)), store_(std::move(store)) {
  validate(rec_);
  if (store_.name != rec_.name) {
    throw DomainError("store '" + store_.name + "' does not belong to '" +
                      rec_.name + "'");
  }
  if ((!store_.terms.empty() && store_.terms[0] != rec_.a0) ||
      (store_.terms.size() > 1 && store_.terms[1] != rec_.a1)) {
    throw DomainError("store initial values disagree with " + rec_.name);
  }
}

void Sequence::extend_to(long n) {
  {
    std::shared_lock lock(mu_);
    if (store_.highest_index() >= n) return;
  }
  std::unique_lock lock(mu_);
  logbehave::term(rec_, n, store_);
}

BigInt Sequence::term(long n) {
  if (n < 0) throw InvalidIndex("negative index " + std::to_string(n));
  extend_to(n);
  std::shared_lock lock(mu_);
  return store_.terms[static_cast<std::size_t>(n)];
}

BigRat Sequence::ratio(long n) {
  if (n < 1) throw InvalidIndex("ratio needs n >= 1, got " + std::to_string(n));
  extend_to(n);
  std::shared_lock lock(mu_);
  const BigInt& lo = store_.terms[static_cast<std::size_t>(n - 1)];
  if (sgn(lo) == 0) {
    throw ZeroDenominator(rec_.name + ": term " + std::to_string(n - 1) + " is zero");
  }
  return make_rat(store_.terms[static_cast<std::size_t>(n)], lo);
}

SequenceStore Sequence::snapshot() const {
  std::shared_lock lock(mu_);
  return store_;
}

}  // namespace logbehave
