#include "logbehave/serialize.hpp"

#include <algorithm>

#include "logbehave/errors.hpp"

namespace logbehave {

namespace {

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long>());
  throw DomainError("expected an integer or a decimal string, got " + j.dump());
}

Json big(const BigInt& x) { return x.get_str(10); }

PositivityMethod method_from(const std::string& s) {
  if (s == "ShiftedCoefficients") return PositivityMethod::ShiftedCoefficients;
  if (s == "RootBoundSweep") return PositivityMethod::RootBoundSweep;
  throw DomainError("unknown positivity method '" + s + "'");
}

BoundSide side_from(const std::string& s) {
  if (s == "lower") return BoundSide::Lower;
  if (s == "upper") return BoundSide::Upper;
  throw DomainError("unknown bound side '" + s + "'");
}

Conclusion conclusion_from(const std::string& s) {
  if (s == "Certified") return Conclusion::Certified;
  if (s == "BaseFails") return Conclusion::BaseFails;
  if (s == "StepFails") return Conclusion::StepFails;
  throw DomainError("unknown conclusion '" + s + "'");
}

}  // namespace

Json to_json(const PolyZ& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(big(c));
  return a;
}

PolyZ poly_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be an array of coefficients");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(big_from_json(x));
  return PolyZ(std::move(c));
}

Json to_json(const RatFunc& r) {
  return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
  RatFunc r(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
  // Certificates must store the canonical form.
  if (!(r.num() == poly_from_json(j.at("num"))) || !(r.den() == poly_from_json(j.at("den")))) {
    throw DomainError("rational function is not in reduced form");
  }
  return r;
}

Json to_json(const Order2Recurrence& rec) {
  return Json{{"name", rec.name},          {"c2", to_json(rec.c2)},
              {"c1", to_json(rec.c1)},     {"c0", to_json(rec.c0)},
              {"a0", big(rec.a0)},         {"a1", big(rec.a1)},
              {"first_valid_n", rec.first_valid_n}};
}

Order2Recurrence recurrence_from_json(const Json& j) {
  Order2Recurrence rec{j.at("name").get<std::string>(),
                       poly_from_json(j.at("c2")),
                       poly_from_json(j.at("c1")),
                       poly_from_json(j.at("c0")),
                       big_from_json(j.at("a0")),
                       big_from_json(j.at("a1")),
                       j.value("first_valid_n", 1L)};
  validate(rec);
  return rec;
}

Json to_json(const PositivityCertificate& c) {
  Json data = Json::object();
  if (c.method == PositivityMethod::ShiftedCoefficients) {
    Json s = Json::array();
    for (const auto& x : c.shifted) s.push_back(big(x));
    data["shifted_coefficients"] = s;
  } else {
    data["root_bound"] = big(c.root_bound);
    Json ev = Json::array();
    for (const auto& [n, v] : c.evaluations) ev.push_back(Json::array({n, big(v)}));
    data["evaluations"] = ev;
  }
  Json j{{"polynomial", to_json(c.polynomial)},
         {"tail_start", c.tail_start},
         {"method", to_string(c.method)},
         {"data", data},
         {"certified", c.certified}};
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

PositivityCertificate positivity_from_json(const Json& j) {
  PositivityCertificate c;
  c.polynomial = poly_from_json(j.at("polynomial"));
  c.tail_start = j.at("tail_start").get<long>();
  c.method = method_from(j.at("method").get<std::string>());
  const Json& data = j.at("data");
  if (c.method == PositivityMethod::ShiftedCoefficients) {
    for (const auto& x : data.at("shifted_coefficients")) c.shifted.push_back(big_from_json(x));
  } else {
    c.root_bound = big_from_json(data.at("root_bound"));
    for (const auto& e : data.at("evaluations")) {
      c.evaluations.emplace_back(e.at(0).get<long>(), big_from_json(e.at(1)));
    }
  }
  c.certified = j.at("certified").get<bool>();
  if (!j.at("witness").is_null()) c.witness = j.at("witness").get<long>();
  return c;
}

Json to_json(const InductionCertificate& c) {
  Json side_conditions = Json::array();
  for (const auto& s : c.side_conditions) {
    side_conditions.push_back(Json{{"name", s.name}, {"certificate", to_json(s.certificate)}});
  }
  Json nested = Json::array();
  for (const auto& r : c.ratio_positivity) nested.push_back(to_json(r));
  return Json{
      {"schema", kSchemaVersion},
      {"recurrence", to_json(c.recurrence)},
      {"ratio_map",
       Json{{"A", to_json(c.map.A)}, {"B", to_json(c.map.B)}, {"valid_from", c.map.valid_from}}},
      {"bound", to_json(c.spec.bound)},
      {"side", to_string(c.spec.side)},
      {"shift", c.spec.shift},
      {"base",
       Json{{"n", c.base.n},
            {"ratio_num", big(c.base.ratio.get_num())},
            {"ratio_den", big(c.base.ratio.get_den())},
            {"bound_num", big(c.base.bound_value.get_num())},
            {"bound_den", big(c.base.bound_value.get_den())},
            {"holds", c.base.holds}}},
      {"side_conditions", side_conditions},
      {"step_numerator", to_json(c.step_numerator)},
      {"step_denominator", to_json(c.step_denominator)},
      {"positivity", to_json(c.step_positivity)},
      {"ratio_positivity", nested},
      {"conclusion", to_string(c.conclusion)},
      {"note", c.note}};
}

InductionCertificate certificate_from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw DomainError("unsupported certificate schema");
  }
  InductionCertificate c;
  c.recurrence = recurrence_from_json(j.at("recurrence"));
  const Json& m = j.at("ratio_map");
  c.map = RatioMap{ratfunc_from_json(m.at("A")), ratfunc_from_json(m.at("B")),
                   m.at("valid_from").get<long>()};
  const Json& base = j.at("base");
  c.spec = BoundSpec{ratfunc_from_json(j.at("bound")), side_from(j.at("side").get<std::string>()),
                     j.at("shift").get<long>(), base.at("n").get<long>()};
  c.base.n = base.at("n").get<long>();
  c.base.ratio = make_rat(big_from_json(base.at("ratio_num")), big_from_json(base.at("ratio_den")));
  c.base.bound_value =
      make_rat(big_from_json(base.at("bound_num")), big_from_json(base.at("bound_den")));
  if (c.base.ratio.get_num() != big_from_json(base.at("ratio_num")) ||
      c.base.bound_value.get_num() != big_from_json(base.at("bound_num"))) {
    throw DomainError("base values are not in lowest terms");
  }
  c.base.holds = base.at("holds").get<bool>();
  for (const auto& s : j.at("side_conditions")) {
    c.side_conditions.push_back(
        {s.at("name").get<std::string>(), positivity_from_json(s.at("certificate"))});
  }
  c.step_numerator = poly_from_json(j.at("step_numerator"));
  c.step_denominator = poly_from_json(j.at("step_denominator"));
  c.step_positivity = positivity_from_json(j.at("positivity"));
  for (const auto& r : j.at("ratio_positivity")) {
    c.ratio_positivity.push_back(certificate_from_json(r));
  }
  c.conclusion = conclusion_from(j.at("conclusion").get<std::string>());
  c.note = j.value("note", std::string());
  return c;
}

Json to_json(const PropertyReport& r) {
  Json verdicts = Json::array();
  for (const auto& x : r.results) {
    verdicts.push_back(
        Json{{"n", x.n}, {"verdict", to_string(x.verdict)}, {"path", x.path.to_string()}});
  }
  Json j{{"property", r.property},
         {"range", Json::array({r.n_lo, r.n_hi})},
         {"holds", r.holds()},
         {"interval_decided", r.interval_decided()},
         {"exact_decided", r.exact_decided()}};
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  j["partial"] = r.partial;
  if (r.partial) j["partial_reason"] = r.partial_reason;
  j["verdicts"] = verdicts;
  return j;
}

Json to_json(const TheoremReport& r, bool with_timing) {
  Json parts = Json::array();
  for (const auto& p : r.parts) {
    parts.push_back(Json{{"display", p.display},
                         {"description", p.description},
                         {"range", Json::array({p.n_lo, p.n_hi})},
                         {"holds", p.holds},
                         {"method", p.method},
                         {"witnesses", p.witnesses}});
  }
  Json j{{"id", r.id}, {"holds", r.holds}, {"parts", parts}, {"notes", r.notes}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

bool ResultEntry::holds() const {
  return verdict == "HoldsStrictly" || verdict == "Holds" || verdict == "Certified";
}

bool RunReport::holds() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ResultEntry& e) { return e.holds(); });
}

Json to_json(const RunReport& r) {
  Json results = Json::array();
  for (const auto& e : r.results) {
    results.push_back(Json{{"id", e.id},
                           {"paper_ref", e.paper_ref},
                           {"range", Json::array({e.n_lo, e.n_hi})},
                           {"verdict", e.verdict},
                           {"method", e.method},
                           {"witnesses", e.witnesses}});
  }
  return Json{{"schema", r.schema}, {"timestamp", r.timestamp}, {"results", results}};
}

RunReport run_report_from_json(const Json& j) {
  RunReport r;
  r.schema = j.at("schema").get<int>();
  r.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& e : j.at("results")) {
    r.results.push_back(ResultEntry{e.at("id").get<std::string>(),
                                    e.at("paper_ref").get<std::string>(),
                                    e.at("range").at(0).get<long>(),
                                    e.at("range").at(1).get<long>(),
                                    e.at("verdict").get<std::string>(),
                                    e.at("method").get<std::string>(),
                                    e.at("witnesses").get<std::vector<std::string>>()});
  }
  return r;
}

}  // namespace logbehave
