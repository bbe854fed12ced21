#pragma once

// JSON forms of certificates and reports. Exact values are written as
// decimal strings; indices are JSON integers.

#include <json.hpp>

#include <string>
#include <vector>

#include "logbehave/induction.hpp"
#include "logbehave/logbehavior.hpp"
#include "logbehave/paperchecks.hpp"

namespace logbehave {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const PolyZ& p);
PolyZ poly_from_json(const Json& j);
Json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const Json& j);
Json to_json(const Order2Recurrence& rec);
Order2Recurrence recurrence_from_json(const Json& j);

Json to_json(const PositivityCertificate& c);
PositivityCertificate positivity_from_json(const Json& j);

Json to_json(const InductionCertificate& c);
InductionCertificate certificate_from_json(const Json& j);

Json to_json(const PropertyReport& r);
Json to_json(const TheoremReport& r, bool with_timing = true);

// One line of a verification run report.
struct ResultEntry {
  std::string id;
  std::string paper_ref;
  long n_lo = 0;
  long n_hi = 0;
  std::string verdict;
  std::string method;
  std::vector<std::string> witnesses;

  bool holds() const;
  bool operator==(const ResultEntry&) const = default;
};

struct RunReport {
  int schema = kSchemaVersion;
  std::string timestamp;
  std::vector<ResultEntry> results;

  bool holds() const;
  bool operator==(const RunReport&) const = default;
};

Json to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

}  // namespace logbehave
