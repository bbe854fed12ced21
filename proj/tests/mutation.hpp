#pragma once

// Single-value tampering of certificate JSON: every integer leaf and every
// decimal-string leaf is moved by +1 and by -1, one at a time.

#include <json.hpp>

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "logbehave/serialize.hpp"

namespace mutation {

using logbehave::Json;

inline bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline void collect(const Json& j, const Json::json_pointer& at, std::vector<Json::json_pointer>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) collect(it.value(), at / it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect(j[i], at / i, out);
  } else if (j.is_number_integer() || (j.is_string() && is_decimal(j.get<std::string>()))) {
    out.push_back(at);
  }
}

// Calls visit(mutated_document, description) for every single-value change.
inline std::size_t for_each_mutant(const Json& doc,
                                   const std::function<void(const Json&, const std::string&)>& visit) {
  std::vector<Json::json_pointer> leaves;
  collect(doc, Json::json_pointer(), leaves);
  std::size_t count = 0;
  for (const auto& p : leaves) {
    for (int delta : {1, -1}) {
      Json m = doc;
      Json& leaf = m[p];
      if (leaf.is_number_integer()) {
        leaf = leaf.get<long>() + delta;
      } else {
        mpz_class v(leaf.get<std::string>());
        v += delta;
        leaf = v.get_str();
      }
      visit(m, p.to_string() + (delta > 0 ? " +1" : " -1"));
      ++count;
    }
  }
  return count;
}

// True when the tampered document fails to load or fails the re-check.
inline bool rejected(const Json& doc) {
  try {
    const auto cert = logbehave::certificate_from_json(doc);
    return !logbehave::recheck(cert).ok;
  } catch (const std::exception&) {
    return true;
  }
}

}  // namespace mutation
