#pragma once

// logbehave terms|verify|certify|recheck
//
// Exit codes: 0 success, 2 configuration or usage error, 3 computation
// error, 4 a verification verdict failed.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logbehave/errors.hpp"
#include "logbehave/serialize.hpp"

namespace logbehave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCompute = 3;
inline constexpr int kExitVerification = 4;

class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct CheckConfig {
  std::string id;
  std::string kind;
  std::string sequence;
  std::string paper_ref;
  long n_lo = 0;
  long n_hi = 0;
  bool strict = true;
  Direction direction = Direction::Increasing;
  // ratio_bound
  BoundSide side = BoundSide::Lower;
  std::string bound;
  long shift = 0;
  long base = 1;
  long span = 200;
  // theorem
  std::string theorem;
  long gap_hi = 2000;
};

struct RunConfig {
  std::vector<Order2Recurrence> sequences;  // user-defined, besides clf/flf
  std::vector<CheckConfig> checks;
  PrecisionLadder ladder;
  unsigned jobs = 1;
  unsigned pi_bits = 64;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::filesystem::path> out;
};

// Validates the whole document; errors name the offending field.
RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::filesystem::path& path);

// "64,256,1024"; must be strictly increasing positive integers.
std::vector<unsigned> parse_ladder(const std::string& text);

// Runs every check; timings go to `table` (one line per result).
RunReport run_verify(const RunConfig& config, std::ostream& table);

// Write to a temporary file next to `path`, then rename.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logbehave::cli
