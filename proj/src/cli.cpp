#include "logbehave/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "logbehave/bound_parser.hpp"
#include "logbehave/paperchecks.hpp"

namespace logbehave::cli {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::trunc | std::ios::binary);
    if (!o) throw IoError("cannot write " + tmp.string());
    o << contents;
    if (!o) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::vector<unsigned> parse_ladder(const std::string& text) {
  std::vector<unsigned> rungs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("precision_ladder", "invalid rung '" + item + "'");
    }
    const unsigned long v = std::stoul(item);
    if (v == 0 || v > 1u << 20) throw ConfigError("precision_ladder", "rung out of range");
    if (!rungs.empty() && v <= rungs.back()) {
      throw ConfigError("precision_ladder", "rungs must be strictly increasing");
    }
    rungs.push_back(static_cast<unsigned>(v));
  }
  if (rungs.empty()) throw ConfigError("precision_ladder", "empty ladder");
  return rungs;
}

namespace {

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> kinds = {
      "terms",       "log_concave", "log_convex",     "ratio_monotone", "root_log_concave",
      "root_monotone", "ratio_bound", "theorem",      "vuh",            "vu1",
      "nfu",         "vu2",         "binomial_chain", "h_gt_16",        "sasvari",
      "euler",       "l_decreasing", "r_increasing",  "rn_identity",    "l_below_r"};
  return kinds;
}

const std::set<std::string>& theorems() {
  static const std::set<std::string> t = {"clf-root-log-concavity", "flf-root-log-concavity",
                                          "root-monotonicity"};
  return t;
}

// Checks that only make sense for one built-in sequence.
std::string implied_sequence(const std::string& kind) {
  if (kind == "vuh" || kind == "vu1" || kind == "vu2" || kind == "binomial_chain") return "flf";
  if (kind == "l_decreasing" || kind == "l_below_r") return "clf";
  return {};
}

template <typename T>
T field(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) throw ConfigError(path + "." + key, "missing");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(path + "." + key, "wrong type");
  }
}

template <typename T>
T field_or(const Json& j, const std::string& path, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return field<T>(j, path, key);
}

Order2Recurrence parse_sequence(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "must be an object");
  auto poly = [&](const char* key) {
    if (!j.contains(key)) throw ConfigError(path + "." + key, "missing");
    try {
      return poly_from_json(j.at(key));
    } catch (const Error& e) {
      throw ConfigError(path + "." + key, e.what());
    }
  };
  auto integer = [&](const char* key) {
    if (!j.contains(key)) throw ConfigError(path + "." + key, "missing");
    const Json& v = j.at(key);
    try {
      if (v.is_string()) return parse_bigint(v.get<std::string>());
      if (v.is_number_integer()) return BigInt(v.get<long>());
    } catch (const Error& e) {
      throw ConfigError(path + "." + key, e.what());
    }
    throw ConfigError(path + "." + key, "expected an integer");
  };
  Order2Recurrence rec{field<std::string>(j, path, "name"),
                       poly("c2"),
                       poly("c1"),
                       poly("c0"),
                       integer("a0"),
                       integer("a1"),
                       field_or<long>(j, path, "first_valid_n", 1)};
  try {
    validate(rec);
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
  return rec;
}

CheckConfig parse_check(const Json& j, const std::string& path,
                        const std::set<std::string>& sequences) {
  if (!j.is_object()) throw ConfigError(path, "must be an object");
  CheckConfig c;
  c.kind = field<std::string>(j, path, "kind");
  if (!known_kinds().count(c.kind)) throw ConfigError(path + ".kind", "unknown kind '" + c.kind + "'");
  c.id = field_or<std::string>(j, path, "id", c.kind);
  c.paper_ref = field_or<std::string>(j, path, "paper_ref", "");

  if (c.kind == "theorem") {
    c.theorem = field<std::string>(j, path, "theorem");
    if (!theorems().count(c.theorem)) {
      throw ConfigError(path + ".theorem", "unknown theorem '" + c.theorem + "'");
    }
    c.n_hi = field<long>(j, path, "n_hi");
    const long min = c.theorem == "clf-root-log-concavity" ? 7 : 10;
    if (c.n_hi < min) {
      throw ConfigError(path + ".n_hi", "must be >= " + std::to_string(min));
    }
    c.gap_hi = field_or<long>(j, path, "gap_hi", 2000);
    if (c.gap_hi < 11) throw ConfigError(path + ".gap_hi", "must be >= 11");
    return c;
  }

  const std::string implied = implied_sequence(c.kind);
  c.sequence = field_or<std::string>(j, path, "sequence", implied);
  if (!implied.empty() && c.sequence != implied) {
    throw ConfigError(path + ".sequence", c.kind + " applies to " + implied + " only");
  }
  const bool needs_sequence = c.kind != "nfu" && c.kind != "h_gt_16" && c.kind != "sasvari" &&
                              c.kind != "euler" && c.kind != "r_increasing" &&
                              c.kind != "rn_identity";
  if (needs_sequence && !sequences.count(c.sequence)) {
    throw ConfigError(path + ".sequence", "undefined sequence '" + c.sequence + "'");
  }

  if (c.kind == "ratio_bound") {
    const auto side = field<std::string>(j, path, "side");
    if (side != "lower" && side != "upper") throw ConfigError(path + ".side", "lower or upper");
    c.side = side == "lower" ? BoundSide::Lower : BoundSide::Upper;
    c.bound = field<std::string>(j, path, "bound");
    try {
      parse_bound(c.bound);
    } catch (const Error& e) {
      throw ConfigError(path + ".bound", e.what());
    }
    c.shift = field_or<long>(j, path, "shift", 0);
    c.base = field<long>(j, path, "base");
    c.span = field_or<long>(j, path, "span", 200);
    if (c.base < 1) throw ConfigError(path + ".base", "must be >= 1");
    if (c.span < 0) throw ConfigError(path + ".span", "must be >= 0");
    return c;
  }

  if (!j.contains("range")) throw ConfigError(path + ".range", "missing");
  const Json& r = j.at("range");
  if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
    throw ConfigError(path + ".range", "expected [lo, hi]");
  }
  c.n_lo = r[0].get<long>();
  c.n_hi = r[1].get<long>();
  if (c.n_lo > c.n_hi) throw ConfigError(path + ".range", "empty range");
  static const std::map<std::string, long> min_lo = {
      {"terms", 0},   {"log_concave", 1}, {"log_convex", 1},     {"ratio_monotone", 1},
      {"root_log_concave", 2}, {"root_monotone", 1}, {"vuh", 2}, {"vu1", 1},
      {"nfu", 1},     {"vu2", 1},         {"binomial_chain", 1}, {"h_gt_16", 2},
      {"sasvari", 1}, {"euler", 1},       {"l_decreasing", 3},   {"r_increasing", 3},
      {"rn_identity", 3}, {"l_below_r", 3}};
  if (c.n_lo < min_lo.at(c.kind)) {
    throw ConfigError(path + ".range", "lower end must be >= " + std::to_string(min_lo.at(c.kind)));
  }
  c.strict = field_or<bool>(j, path, "strict", c.kind != "ratio_monotone");
  if (c.kind == "ratio_monotone") {
    const auto d = field<std::string>(j, path, "direction");
    if (d != "increasing" && d != "decreasing") {
      throw ConfigError(path + ".direction", "increasing or decreasing");
    }
    c.direction = d == "increasing" ? Direction::Increasing : Direction::Decreasing;
  }
  return c;
}

}  // namespace

RunConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "config must be a JSON object");
  if (field<int>(doc, "$", "schema") != kSchemaVersion) {
    throw ConfigError("$.schema", "unsupported schema version");
  }
  RunConfig cfg;
  std::set<std::string> names = {"clf", "flf"};
  if (doc.contains("sequences")) {
    const Json& seqs = doc.at("sequences");
    if (!seqs.is_array()) throw ConfigError("$.sequences", "must be an array");
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      const std::string path = "$.sequences[" + std::to_string(i) + "]";
      auto rec = parse_sequence(seqs[i], path);
      if (!names.insert(rec.name).second) {
        throw ConfigError(path + ".name", "duplicate sequence '" + rec.name + "'");
      }
      cfg.sequences.push_back(std::move(rec));
    }
  }
  if (!doc.contains("checks") || !doc.at("checks").is_array() || doc.at("checks").empty()) {
    throw ConfigError("$.checks", "must be a nonempty array");
  }
  std::set<std::string> ids;
  const Json& checks = doc.at("checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string path = "$.checks[" + std::to_string(i) + "]";
    auto c = parse_check(checks[i], path, names);
    if (!ids.insert(c.id).second) throw ConfigError(path + ".id", "duplicate id '" + c.id + "'");
    cfg.checks.push_back(std::move(c));
  }
  if (doc.contains("precision_ladder")) {
    const Json& l = doc.at("precision_ladder");
    if (!l.is_array()) throw ConfigError("$.precision_ladder", "must be an array");
    std::string joined;
    for (const auto& x : l) {
      if (!x.is_number_unsigned()) throw ConfigError("$.precision_ladder", "rungs must be positive integers");
      joined += (joined.empty() ? "" : ",") + std::to_string(x.get<unsigned long>());
    }
    cfg.ladder.rungs = parse_ladder(joined);
  }
  cfg.jobs = field_or<unsigned>(doc, "$", "jobs", 1);
  cfg.pi_bits = field_or<unsigned>(doc, "$", "pi_bits", 64);
  if (cfg.pi_bits < 8) throw ConfigError("$.pi_bits", "must be >= 8");
  if (doc.contains("cache_dir")) cfg.cache_dir = field<std::string>(doc, "$", "cache_dir");
  if (doc.contains("out")) cfg.out = field<std::string>(doc, "$", "out");
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string(), e.what());
  }
  return parse_config(doc);
}

namespace {

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

fs::path cache_path(const fs::path& dir, const std::string& name) {
  return dir / (name + ".seqcache");
}

std::optional<SequenceStore> read_cache(const std::optional<fs::path>& dir,
                                        const Order2Recurrence& rec, std::ostream& log) {
  if (!dir) return std::nullopt;
  const fs::path p = cache_path(*dir, rec.name);
  if (!fs::exists(p)) return std::nullopt;
  try {
    SequenceStore s = load_store(p);
    if (s.name != rec.name || s.terms.empty() || s.terms[0] != rec.a0 ||
        (s.terms.size() > 1 && s.terms[1] != rec.a1)) {
      log << "warning: ignoring cache " << p << ": belongs to another recurrence\n";
      return std::nullopt;
    }
    return s;
  } catch (const Error& e) {
    log << "warning: ignoring cache " << p << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void write_cache(const std::optional<fs::path>& dir, const Sequence& seq) {
  if (!dir) return;
  fs::create_directories(*dir);
  save_store(seq.snapshot(), cache_path(*dir, seq.name()));
}

std::string verdict_of(const PropertyReport& r) {
  if (r.holds_strictly()) return "HoldsStrictly";
  return r.holds() ? "Holds" : "Fails";
}

std::string method_of(const PropertyReport& r) {
  const auto iv = r.interval_decided();
  if (iv == 0) return "exact";
  return "interval+exact (" + std::to_string(iv) + "/" + std::to_string(r.results.size()) +
         " by interval)";
}

ResultEntry entry_of(const CheckConfig& c, const std::string& ref, const PropertyReport& r) {
  ResultEntry e{c.id, c.paper_ref.empty() ? ref : c.paper_ref, r.n_lo, r.n_hi,
                verdict_of(r), method_of(r), {}};
  if (r.first_failure) e.witnesses.push_back("n=" + std::to_string(*r.first_failure));
  return e;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg, std::ostream& log)
      : cfg_(cfg),
        ctx_(read_cache(cfg.cache_dir, clf(), log).value_or(SequenceStore{"clf", {}}),
             read_cache(cfg.cache_dir, flf(), log).value_or(SequenceStore{"flf", {}}),
             CheckOptions{cfg.ladder, cfg.jobs}, cfg.pi_bits) {
    for (const auto& rec : cfg.sequences) {
      auto cached = read_cache(cfg.cache_dir, rec, log);
      user_.emplace(rec.name, cached ? std::make_unique<Sequence>(rec, std::move(*cached))
                                     : std::make_unique<Sequence>(rec));
    }
  }

  Sequence& seq(const std::string& name) {
    if (name == "clf") return ctx_.clf_seq();
    if (name == "flf") return ctx_.flf_seq();
    return *user_.at(name);
  }

  std::vector<ResultEntry> run(const CheckConfig& c) {
    const auto& opt = ctx_.options();
    const std::string& k = c.kind;
    if (k == "theorem") return theorem(c);
    if (k == "ratio_bound") return {ratio_bound(c)};
    if (k == "terms") return {terms(c)};
    Sequence* s = c.sequence.empty() ? nullptr : &seq(c.sequence);
    auto root_ref = [&] {
      if (c.sequence == "clf") return display::kClfRootLogConcave;
      if (c.sequence == "flf") return display::kFlfRootLogConcave;
      return "";
    };
    if (k == "log_concave") return {entry_of(c, "log-concavity", check_log_concave(*s, c.n_lo, c.n_hi, c.strict, opt))};
    if (k == "log_convex") return {entry_of(c, "log-convexity", check_log_convex(*s, c.n_lo, c.n_hi, c.strict, opt))};
    if (k == "ratio_monotone") {
      return {entry_of(c, "ratio-monotonicity",
                       check_ratio_monotone(*s, c.n_lo, c.n_hi, c.direction, c.strict, opt))};
    }
    if (k == "root_log_concave") {
      return {entry_of(c, root_ref(), check_root_log_concave(*s, c.n_lo, c.n_hi, opt, c.strict))};
    }
    if (k == "root_monotone") return {entry_of(c, display::kRootMonotone, check_root_monotone(*s, c.n_lo, c.n_hi, opt))};
    if (k == "vuh") return {entry_of(c, display::kFlfHPower, check_vuh(*s, c.n_lo, c.n_hi, opt))};
    if (k == "vu1") return {entry_of(c, display::kFlfBinomialBound, check_Vu1(*s, c.n_lo, c.n_hi))};
    if (k == "nfu") return {entry_of(c, display::kBinomialPiBound, check_nfu(c.n_lo, c.n_hi, ctx_.pi()))};
    if (k == "vu2") return {entry_of(c, display::kFlfBelow16, check_Vu2(*s, c.n_lo, c.n_hi, ctx_.pi()))};
    if (k == "binomial_chain") {
      return {entry_of(c, display::kFlfBelow16, check_binomial_chain(*s, c.n_lo, c.n_hi, ctx_.pi()))};
    }
    if (k == "h_gt_16") {
      auto r = h_gt_16(c.n_lo, c.n_hi);
      ResultEntry e = entry_of(c, display::kHExceeds16, r.pointwise);
      if (!r.numerator_certificate.certified || !r.denominator_certificate.certified) {
        e.verdict = "Fails";
        e.witnesses.push_back("symbolic certificate failed");
      }
      e.method += " + positivity certificates";
      return {e};
    }
    if (k == "sasvari") {
      auto r = sasvari_exponent_sign(c.n_lo, c.n_hi);
      ResultEntry e = entry_of(c, display::kSasvariSign, r.pointwise);
      if (!r.certificate.certified) e.verdict = "Fails";
      e.method += " + positivity certificate";
      return {e};
    }
    if (k == "euler") return {entry_of(c, display::kClfScaledVsRn, euler_seq_increasing(c.n_lo, c.n_hi))};
    if (k == "l_decreasing") return {entry_of(c, display::kClfScaledVsRn, claim_ln_decreasing(*s, c.n_lo, c.n_hi))};
    if (k == "r_increasing") return {entry_of(c, display::kClfScaledVsRn, claim_rn_increasing(c.n_lo, c.n_hi))};
    if (k == "rn_identity") return {entry_of(c, display::kClfScaledVsRn, check_rn_product_identity(c.n_lo, c.n_hi))};
    if (k == "l_below_r") return {entry_of(c, display::kClfScaledVsRn, check_ln_below_rn(*s, c.n_lo, c.n_hi))};
    throw ConfigError(c.id, "unhandled kind " + k);
  }

  void save_caches() {
    write_cache(cfg_.cache_dir, ctx_.clf_seq());
    write_cache(cfg_.cache_dir, ctx_.flf_seq());
    for (const auto& [name, s] : user_) write_cache(cfg_.cache_dir, *s);
  }

 private:
  ResultEntry terms(const CheckConfig& c) {
    Sequence& s = seq(c.sequence);
    s.extend_to(c.n_hi);
    ResultEntry e{c.id, c.paper_ref.empty() ? c.sequence + "-recurrence" : c.paper_ref,
                  c.n_lo, c.n_hi, "Holds", "exact division at every step", {}};
    for (long n = c.n_lo; n <= c.n_hi; ++n) {
      if (sgn(s.term(n)) <= 0) {
        e.verdict = "Fails";
        e.witnesses.push_back("n=" + std::to_string(n));
        break;
      }
    }
    return e;
  }

  ResultEntry ratio_bound(const CheckConfig& c) {
    Sequence& s = seq(c.sequence);
    const BoundSpec spec{parse_bound(c.bound), c.side, c.shift, c.base};
    auto bv = verify_ratio_bounds(s, {spec}, c.span).front();
    std::string ref = c.paper_ref;
    if (ref.empty()) {
      if (c.sequence == "clf") ref = display::kClfRatioBounds;
      if (c.sequence == "flf") {
        ref = c.side == BoundSide::Lower ? display::kFlfLowerBound : display::kFlfUpperBound;
      }
    }
    ResultEntry e{c.id, ref, c.base, c.base + c.span, "", "induction certificate + exact pointwise", {}};
    if (bv.certificate.certified() && bv.pointwise.holds()) {
      e.verdict = "Certified";
    } else {
      e.verdict = bv.pointwise.holds() ? "NotCertified" : "Fails";
      e.witnesses.push_back("conclusion " + to_string(bv.certificate.conclusion));
      if (!bv.certificate.note.empty()) e.witnesses.push_back(bv.certificate.note);
      if (bv.pointwise.first_failure) {
        e.witnesses.push_back("n=" + std::to_string(*bv.pointwise.first_failure));
      }
    }
    return e;
  }

  std::vector<ResultEntry> theorem(const CheckConfig& c) {
    TheoremReport r;
    if (c.theorem == "clf-root-log-concavity") {
      r = theorem_clf_root_log_concavity(ctx_, c.n_hi);
    } else if (c.theorem == "flf-root-log-concavity") {
      r = theorem_flf_root_log_concavity(ctx_, c.n_hi);
    } else {
      r = proposition_root_monotonicity(ctx_, c.n_hi, c.gap_hi);
    }
    std::vector<ResultEntry> out;
    std::map<std::string, int> seen;
    for (const auto& p : r.parts) {
      const int k = seen[p.display]++;
      out.push_back(ResultEntry{c.id + "/" + p.display + (k ? "#" + std::to_string(k) : ""),
                                p.display, p.n_lo, p.n_hi, p.holds ? "Holds" : "Fails",
                                p.method + "; " + p.description, p.witnesses});
    }
    return out;
  }

  const RunConfig& cfg_;
  PaperContext ctx_;
  std::map<std::string, std::unique_ptr<Sequence>> user_;
};

}  // namespace

RunReport run_verify(const RunConfig& config, std::ostream& table) {
  Runner runner(config, table);
  RunReport report;
  report.timestamp = timestamp_now();
  for (const auto& c : config.checks) {
    const auto t0 = std::chrono::steady_clock::now();
    auto entries = runner.run(c);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& e : entries) {
      table << std::left << std::setw(48) << e.id << " " << std::setw(14) << e.verdict << " ["
            << e.n_lo << ", " << e.n_hi << "] " << std::setw(28) << e.paper_ref << " "
            << std::fixed << std::setprecision(2) << secs << "s\n";
      report.results.push_back(std::move(e));
    }
  }
  runner.save_caches();
  return report;
}

namespace {

Order2Recurrence builtin(const std::string& name) {
  if (name == "clf") return clf();
  if (name == "flf") return flf();
  throw ConfigError("sequence", "unknown sequence '" + name + "' (expected clf or flf)");
}

void emit(const std::optional<std::string>& out_path, const std::string& text, std::ostream& out) {
  if (out_path && !out_path->empty()) {
    write_atomic(*out_path, text);
  } else {
    out << text;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact log-behavior checks for P-recursive sequences", "logbehave"};
  app.require_subcommand(1);
  std::string cache_dir;
  std::string out_path;
  unsigned jobs = 0;
  std::string ladder_text;
  app.add_option("--cache-dir", cache_dir, "Directory for term caches");
  app.add_option("--out", out_path, "Output file (written atomically)");
  app.add_option("--jobs", jobs, "Worker threads for index sweeps");
  app.add_option("--precision-ladder", ladder_text,
                 "Interval precisions tried before exact arithmetic (default 64,256,1024)");

  auto* terms_cmd = app.add_subcommand("terms", "Print a_0..a_n, one per line")->fallthrough();
  std::string seq_name;
  long n_hi = 0;
  terms_cmd->add_option("sequence", seq_name, "clf or flf")->required();
  terms_cmd->add_option("n", n_hi, "Last index")->required()->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run a JSON check suite")->fallthrough();
  std::string config_path;
  verify_cmd->add_option("config", config_path, "Suite configuration")->required();

  auto* certify_cmd =
      app.add_subcommand("certify", "Write an induction certificate for a ratio bound")->fallthrough();
  std::string lower;
  std::string upper;
  long shift = 0;
  long base = 0;
  long span = 200;
  certify_cmd->add_option("sequence", seq_name, "clf or flf")->required();
  auto* lo_opt = certify_cmd->add_option("--lower", lower, "Lower bound expression in n");
  auto* up_opt = certify_cmd->add_option("--upper", upper, "Upper bound expression in n");
  lo_opt->excludes(up_opt);
  certify_cmd->add_option("--shift", shift, "Compare v(n) with bound(n + shift)");
  certify_cmd->add_option("--base", base, "Base index of the induction")->required();
  certify_cmd->add_option("--span", span, "Pointwise cross-check length");

  auto* recheck_cmd = app.add_subcommand("recheck", "Re-validate a certificate file")->fallthrough();
  std::string cert_path;
  recheck_cmd->add_option("certificate", cert_path, "Certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  const std::optional<fs::path> cache =
      cache_dir.empty() ? std::nullopt : std::optional<fs::path>(cache_dir);
  try {
    std::optional<std::vector<unsigned>> ladder;
    if (!ladder_text.empty()) ladder = parse_ladder(ladder_text);

    if (*terms_cmd) {
      const auto rec = builtin(seq_name);
      auto cached = read_cache(cache, rec, err);
      Sequence s = cached ? Sequence(rec, std::move(*cached)) : Sequence(rec);
      std::ostringstream os;
      for (long k = 0; k <= n_hi; ++k) os << s.term(k).get_str() << "\n";
      write_cache(cache, s);
      emit(out_path, os.str(), out);
      return kExitOk;
    }

    if (*verify_cmd) {
      RunConfig cfg = load_config(config_path);
      if (ladder) cfg.ladder.rungs = *ladder;
      if (jobs) cfg.jobs = jobs;
      if (cache) cfg.cache_dir = cache;
      if (!out_path.empty()) cfg.out = out_path;
      std::ostream& table = cfg.out ? out : err;
      const RunReport report = run_verify(cfg, table);
      const std::string text = to_json(report).dump(2) + "\n";
      if (cfg.out) {
        write_atomic(*cfg.out, text);
      } else {
        out << text;
      }
      return report.holds() ? kExitOk : kExitVerification;
    }

    if (*certify_cmd) {
      if (lower.empty() == upper.empty()) {
        throw ConfigError("certify", "exactly one of --lower / --upper is required");
      }
      const auto rec = builtin(seq_name);
      RatFunc bound;
      try {
        bound = parse_bound(lower.empty() ? upper : lower);
      } catch (const ParseError& e) {
        throw ConfigError(lower.empty() ? "--upper" : "--lower", e.what());
      }
      auto cached = read_cache(cache, rec, err);
      Sequence s = cached ? Sequence(rec, std::move(*cached)) : Sequence(rec);
      const BoundSpec spec{bound, lower.empty() ? BoundSide::Upper : BoundSide::Lower, shift, base};
      auto bv = verify_ratio_bounds(s, {spec}, span).front();
      write_cache(cache, s);
      emit(out_path, to_json(bv.certificate).dump(2) + "\n", out);
      err << to_string(bv.certificate.conclusion) << ": " << to_string(spec.side) << " bound "
          << bound.to_string() << " for " << rec.name << ", base " << base << ", step numerator "
          << bv.certificate.step_numerator.to_string() << "; pointwise [" << bv.pointwise.n_lo
          << ", " << bv.pointwise.n_hi << "] " << (bv.pointwise.holds() ? "holds" : "fails");
      if (bv.pointwise.first_failure) err << " at n=" << *bv.pointwise.first_failure;
      err << "\n";
      return bv.certificate.certified() && bv.pointwise.holds() ? kExitOk : kExitVerification;
    }

    if (*recheck_cmd) {
      std::ifstream in(cert_path);
      if (!in) throw ConfigError(cert_path, "cannot open");
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        err << "config error: " << cert_path << ": " << e.what() << "\n";
        return kExitConfig;
      }
      InductionCertificate cert;
      try {
        cert = certificate_from_json(doc);
      } catch (const nlohmann::json::exception& e) {
        out << "rejected: malformed certificate: " << e.what() << "\n";
        return kExitVerification;
      } catch (const Error& e) {
        out << "rejected: " << e.what() << "\n";
        return kExitVerification;
      }
      const RecheckResult r = recheck(cert);
      if (!r.ok) {
        out << "rejected: " << r.reason << "\n";
        return kExitVerification;
      }
      out << "accepted: " << to_string(cert.conclusion) << "\n";
      return cert.certified() ? kExitOk : kExitVerification;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitConfig;
}

}  // namespace logbehave::cli
