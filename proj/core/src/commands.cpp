#include "dgcm/commands.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "dgcm/cm_analysis.hpp"
#include "dgcm/error.hpp"
#include "dgcm/fixtures.hpp"
#include "dgcm/parse.hpp"

namespace dgcm {

using nlohmann::ordered_json;

namespace {

ordered_json ext_json(const ExtendedInt& v) {
  if (v.is_finite()) return v.value();
  return "-inf";
}

std::string poly_string(const Poly& p, const Ring& ring) { return to_string(p, ring); }

ordered_json module_json(const PresentedModule& m) {
  ordered_json j;
  j["degrees"] = m.degrees();
  ordered_json rels = ordered_json::array();
  for (const auto& rel : m.relations()) {
    ordered_json col = ordered_json::array();
    for (const auto& e : to_components(rel, m.rank())) col.push_back(poly_string(e, m.ring()));
    rels.push_back(col);
  }
  j["relations"] = rels;
  return j;
}

ordered_json table_json(const std::vector<CohomologyEntry>& table) {
  ordered_json out = ordered_json::array();
  for (const auto& e : table) {
    ordered_json j;
    j["degree"] = e.degree;
    j["krull_dim"] = e.krull_dim;
    j["module"] = module_json(e.module);
    out.push_back(j);
  }
  return out;
}

ordered_json verdict_json(const CMVerdict& v) {
  ordered_json j;
  j["verdict"] = to_string(v.verdict);
  j["route"] = v.route;
  ordered_json cert = ordered_json::object();
  for (const auto& q : v.certificate) cert[q.name] = ext_json(q.value);
  j["certificate"] = cert;
  j["routes_agree"] = v.routes_agree;
  j["notes"] = v.notes;
  return j;
}

ordered_json bundle_json(const InvariantBundle& b) {
  ordered_json j;
  j["amp"] = b.amp;
  j["sup"] = b.sup;
  j["inf"] = b.inf;
  j["depth"] = ext_json(b.depth);
  j["seq_depth"] = b.seq_depth;
  j["lc_dim"] = ext_json(b.lc_dim);
  j["lc_dim_via_duality"] = ext_json(b.lc_dim_via_duality);
  j["rgamma_profile"] = b.rgamma.degrees;
  j["rgamma_amp"] = b.rgamma.amplitude();
  ordered_json dims = ordered_json::object();
  for (const auto& [deg, dim] : b.cohomology_dims) dims[std::to_string(deg)] = dim;
  j["cohomology_dims"] = dims;
  j["dim_h0"] = b.dim_h0;
  return j;
}

ordered_json checks_json(const std::vector<NamedCheck>& checks) {
  ordered_json out = ordered_json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

bool all_pass(const std::vector<NamedCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ordered_json regseq_json(const RegSeqCertificate& c, const Ring& ring) {
  ordered_json j;
  ordered_json seq = ordered_json::array();
  for (const auto& x : c.sequence) seq.push_back(poly_string(x, ring));
  j["sequence"] = seq;
  j["length"] = c.sequence.size();
  ordered_json steps = ordered_json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"element", poly_string(s.element, ring)},
                     {"kernel_trivial", s.kernel_trivial},
                     {"dim_h0_before", s.dim_h0_before},
                     {"dim_h0_after", s.dim_h0_after},
                     {"amp_before", s.amp_before},
                     {"amp_after", s.amp_after},
                     {"inf_after", s.inf_after}});
  }
  j["steps"] = steps;
  j["maximal"] = c.maximal;
  j["system_of_parameters"] = c.system_of_parameters;
  j["candidates_tried"] = c.candidates_tried;
  return j;
}

ordered_json dualizing_json(const DualizingStructureReport& rep) {
  ordered_json j;
  j["shift"] = rep.model.shift;
  j["inf"] = rep.model.inf();
  j["sup"] = rep.model.sup();
  j["amp"] = rep.model.amp();
  j["cohomology"] = table_json(rep.model.table);
  j["structure"] = checks_json(rep.checks);
  j["all_pass"] = rep.all_pass();
  return j;
}

ordered_json triv_ext_json(const TrivExtReport& r) {
  ordered_json j;
  j["sup_negative"] = r.sup_negative;
  j["lc_dim_equals_inf_plus_dim"] = r.lc_dim_equals_inf_plus_dim;
  j["lc_dim_below_depth"] = r.lc_dim_below_depth;
  j["hypotheses"] = r.hypotheses_hold();
  j["lc_dim_module"] = ext_json(r.lc_dim_m);
  j["inf_module"] = r.inf_m;
  j["dim_base"] = r.dim_base;
  j["depth_base"] = ext_json(r.depth_base);
  j["depth_module"] = ext_json(r.depth_m);
  j["module_cm"] = r.module_cm;
  j["direct"] = verdict_json(r.direct);
  j["agrees"] = r.theorem_agrees;
  return j;
}

struct Settings {
  std::uint64_t seed;
  int max_tries;
  int t_max;
};

Settings settings(const Problem& p, const RunOptions& o) {
  return {o.seed.value_or(p.file.options.seed), o.max_tries.value_or(p.file.options.max_tries),
          o.t_max.value_or(p.file.options.t_max)};
}

std::vector<Ideal> all_primes(const Problem& p, const RunOptions& o) {
  std::vector<Ideal> out = p.primes;
  for (const auto& spec : o.primes) {
    std::vector<Poly> gens;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) gens.push_back(parse_polynomial(item, *p.ring));
    out.emplace_back(p.ring, std::move(gens));
  }
  return out;
}

std::optional<TrivExtReport> triv_ext_report(const Problem& p) {
  const auto& a = p.model;
  if (a.construction() != Construction::TrivialExtension) return std::nullopt;
  return check_triv_ext_cm(a.base_ideal(), *a.extension_module(), a.shift());
}

ordered_json module_reports(const Problem& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [name, m] : p.modules) {
    ordered_json j;
    j["name"] = name;
    j["cohomology"] = table_json(m.cohomology_table());
    if (m.is_zero()) {
      j["zero"] = true;
      out.push_back(j);
      continue;
    }
    j["invariants"] = bundle_json(compute_invariants(m));
    if (!p.model.nonnegative()) {
      CMVerdict cm = check_cm_module(p.model, m);
      j["cm"] = verdict_json(cm);
      if (cm.verdict == Verdict::CM) j["mcm"] = verdict_json(check_mcm_module(p.model, m));
    }
    out.push_back(j);
  }
  return out;
}

// Every nonzero cohomology module of A fed through the Koszul oracle and
// compared against its duality profile.
ordered_json oracle_reports(const Problem& p, int t_max) {
  ordered_json out = ordered_json::array();
  for (const auto& e : p.model.cohomology_table()) {
    auto oracle = koszul_colimit_profile_oracle(e.module, t_max);
    auto profile = rgamma_profile(Complex::single(e.module, 0)).degrees;
    bool contained = std::includes(profile.begin(), profile.end(), oracle.begin(), oracle.end());
    out.push_back({{"degree", e.degree}, {"oracle", oracle}, {"profile", profile}, {"contained", contained}});
  }
  return out;
}

ordered_json summary_json(const Problem& p) {
  const auto& a = p.model;
  ordered_json s;
  s["construction"] = to_string(a.construction());
  InvariantBundle b = compute_invariants(a);
  s["dim_h0"] = b.dim_h0;
  s["amp"] = b.amp;
  s["inf"] = b.inf;
  s["sup"] = b.sup;
  s["depth"] = ext_json(b.depth);
  s["seq_depth"] = b.seq_depth;
  s["lc_dim"] = ext_json(b.lc_dim);
  s["rgamma_amp"] = b.rgamma.amplitude();
  s["rgamma_profile"] = b.rgamma.degrees;
  ordered_json dims = ordered_json::object();
  for (const auto& [deg, dim] : b.cohomology_dims) dims[std::to_string(deg)] = dim;
  s["cohomology_dims"] = dims;
  s["dualizing_amp"] = dualizing_dg(a).amp();
  if (a.nonnegative()) {
    CMVerdict v = check_cm_nonneg(a);
    s["nonneg"] = to_string(v.verdict);
    s["condition_1"] = v.quantity("condition_1") == ExtendedInt(1);
    s["condition_2"] = v.quantity("condition_2") == ExtendedInt(1);
  } else {
    s["local"] = to_string(check_local_cm(a).verdict);
    s["dualizing"] = to_string(check_cm_via_dualizing(a).verdict);
    s["global"] = to_string(check_cm_global(a, p.primes).verdict.verdict);
    ordered_json at = ordered_json::object();
    for (const auto& q : p.primes) at[q.to_string()] = to_string(check_cm_at_prime(a, q).verdict);
    s["at"] = at;
    const auto& o = p.file.options;
    try {
      s["regseq_length"] = find_regular_sequence(a, false, o.seed, o.max_tries).sequence.size();
    } catch (const IncompleteSearch&) {
      s["regseq_length"] = nullptr;
    }
    try {
      s["sop_length"] = find_regular_sequence(a, true, o.seed, o.max_tries).sequence.size();
    } catch (const IncompleteSearch&) {
      s["sop_length"] = nullptr;
    }
  }
  if (auto t = triv_ext_report(p)) {
    s["triv_ext"] = {{"hypotheses", t->hypotheses_hold()}, {"module_cm", t->module_cm}, {"agrees", t->theorem_agrees}};
  }
  s["theorem_suite"] = all_pass(verify_theorem_suite(a)) ? "PASS" : "FAIL";
  return s;
}

void compare(const nlohmann::json& expected, const nlohmann::json& actual, const std::string& path,
             std::vector<std::string>& out) {
  if (expected.is_object() && actual.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const std::string key = path.empty() ? it.key() : path + "." + it.key();
      if (!actual.contains(it.key())) {
        out.push_back(key + ": missing");
        continue;
      }
      compare(it.value(), actual[it.key()], key, out);
    }
    return;
  }
  if (expected != actual) out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

// Indented plain-text rendering of a report.
bool is_scalar_array(const ordered_json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& e) {
           return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const ordered_json& x) {
                                         return x.is_primitive();
                                       }));
         });
}

std::string scalar_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(const ordered_json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    const bool nested = v.is_object() || (v.is_array() && !is_scalar_array(v));
    if (j.is_array()) {
      if (!nested) {
        os << pad << "- " << scalar_text(v) << "\n";
        continue;
      }
      // List items in YAML style: "- " replaces the indentation of the first line.
      std::ostringstream item;
      render_text(v, indent + 2, item);
      std::string text = item.str();
      if (text.size() >= pad.size() + 2) text.replace(pad.size(), 2, "- ");
      os << text;
    } else if (nested) {
      os << pad << it.key() << ":\n";
      render_text(v, indent + 2, os);
    } else {
      os << pad << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

int verdict_exit(const std::string& verdict, bool assert_verdict) {
  if (!assert_verdict) return 0;
  return (verdict == "CM" || verdict == "PASS") ? 0 : 2;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"analyze", "check-cm", "check-cm-at", "check-cm-global", "check-cm-nonneg",
                                                 "regseq", "dualizing", "verify", "examples"};
  return names;
}

std::string summarize(const Problem& problem) { return summary_json(problem).dump(); }

std::vector<std::string> expected_mismatches(const Problem& problem) {
  std::vector<std::string> out;
  if (problem.file.expected.empty()) return out;
  compare(nlohmann::json::parse(problem.file.expected), nlohmann::json::parse(summarize(problem)), "", out);
  return out;
}

std::string strip_timing(const std::string& json_report) {
  auto j = ordered_json::parse(json_report);
  j.erase("timing_ms");
  return j.dump();
}

CommandResult run_command(const std::string& command, const Problem* problem, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ordered_json report;
  report["schema"] = 1;
  report["command"] = command;
  std::string verdict;
  ordered_json result;

  if (command == "examples") {
    ordered_json list = ordered_json::array();
    for (const auto& f : bundled_examples()) {
      ProblemFile pf = parse_problem(f.text);
      list.push_back({{"name", f.name},
                      {"description", pf.description},
                      {"expected", pf.expected.empty() ? ordered_json::object() : ordered_json::parse(pf.expected)}});
    }
    result["fixtures"] = list;
  } else {
    if (problem == nullptr) throw PreconditionError("command " + command + " needs a problem file");
    const Problem& p = *problem;
    const DGRingModel& a = p.model;
    const Settings st = settings(p, options);
    report["input"] = ordered_json::parse(serialize_problem(p.file));

    if (command == "analyze") {
      result["model"] = a.describe();
      result["cohomology"] = table_json(a.cohomology_table());
      result["invariants"] = bundle_json(compute_invariants(a));
      CMVerdict v = a.nonnegative() ? check_cm_nonneg(a) : check_local_cm(a);
      result["cm"] = verdict_json(v);
      verdict = to_string(v.verdict);
      result["dualizing"] = dualizing_json(dualizing_structure_report(a));
      if (!p.modules.empty()) result["modules"] = module_reports(p);
    } else if (command == "check-cm") {
      if (a.nonnegative()) {
        CMVerdict v = check_cm_nonneg(a);
        result["nonneg"] = verdict_json(v);
        verdict = to_string(v.verdict);
      } else {
        CMVerdict v = check_local_cm(a);
        result["local"] = verdict_json(v);
        result["via_dualizing"] = verdict_json(check_cm_via_dualizing(a));
        verdict = to_string(v.verdict);
      }
    } else if (command == "check-cm-at") {
      auto primes = all_primes(p, options);
      if (primes.empty()) throw PreconditionError("check-cm-at: no primes given (use --prime or the file's \"primes\")");
      ordered_json list = ordered_json::array();
      verdict = "CM";
      for (const auto& q : primes) {
        CMVerdict v = check_cm_at_prime(a, q);
        if (v.verdict != Verdict::CM) verdict = to_string(v.verdict);
        ordered_json e = verdict_json(v);
        e["prime"] = q.to_string();
        list.push_back(e);
      }
      result["primes"] = list;
    } else if (command == "check-cm-global") {
      GlobalCMResult g = check_cm_global(a, all_primes(p, options));
      result["global"] = verdict_json(g.verdict);
      ordered_json checked = ordered_json::array();
      for (const auto& [q, v] : g.checked) checked.push_back({{"prime", q.to_string()}, {"verdict", to_string(v.verdict)}});
      result["checked"] = checked;
      ordered_json uncovered = ordered_json::array();
      for (const auto& i : g.uncovered) uncovered.push_back(i.to_string());
      result["uncovered"] = uncovered;
      verdict = to_string(g.verdict.verdict);
    } else if (command == "check-cm-nonneg") {
      CMVerdict v = check_cm_nonneg(a);
      result["nonneg"] = verdict_json(v);
      verdict = to_string(v.verdict);
    } else if (command == "regseq") {
      InvariantBundle b = compute_invariants(a);
      result["seq_depth"] = b.seq_depth;
      result["dim_h0"] = b.dim_h0;
      try {
        RegSeqCertificate c = find_regular_sequence(a, false, st.seed, st.max_tries);
        result["regular_sequence"] = regseq_json(c, a.ring());
        result["length_matches_seq_depth"] = static_cast<int>(c.sequence.size()) == b.seq_depth;
      } catch (const IncompleteSearch& e) {
        result["regular_sequence"] = {{"incomplete", e.what()}, {"partial", regseq_json(e.partial(), a.ring())}};
      }
      try {
        RegSeqCertificate c = find_regular_sequence(a, true, st.seed, st.max_tries);
        result["system_of_parameters"] = regseq_json(c, a.ring());
        verdict = static_cast<int>(c.sequence.size()) == b.dim_h0 ? "CM" : "NOT_CM";
      } catch (const IncompleteSearch& e) {
        result["system_of_parameters"] = {{"incomplete", e.what()}, {"partial", regseq_json(e.partial(), a.ring())}};
        verdict = "UNKNOWN";
      }
    } else if (command == "dualizing") {
      DualizingStructureReport rep = dualizing_structure_report(a);
      result["dualizing"] = dualizing_json(rep);
      if (!a.nonnegative()) {
        CMVerdict v = check_cm_via_dualizing(a);
        result["via_dualizing"] = verdict_json(v);
        verdict = to_string(v.verdict);
      }
    } else if (command == "verify") {
      auto suite = verify_theorem_suite(a);
      bool pass = all_pass(suite);
      result["theorem_suite"] = checks_json(suite);
      if (auto t = triv_ext_report(p)) {
        result["triv_ext"] = triv_ext_json(*t);
        pass = pass && t->theorem_agrees;
      }
      ordered_json oracle = oracle_reports(p, st.t_max);
      for (const auto& o : oracle) pass = pass && o["contained"].get<bool>();
      result["oracle"] = oracle;
      if (!p.modules.empty()) result["modules"] = module_reports(p);
      if (!p.file.expected.empty()) {
        auto mism = expected_mismatches(p);
        result["expected_mismatches"] = mism;
        pass = pass && mism.empty();
      }
      verdict = pass ? "PASS" : "FAIL";
    } else {
      throw PreconditionError("unknown command " + command);
    }
  }

  if (!verdict.empty()) report["verdict"] = verdict;
  report["result"] = result;
  if (options.timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  CommandResult out;
  if (options.format == OutputFormat::Json) {
    out.output = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    ordered_json shown = report;
    shown.erase("input");
    render_text(shown, 0, os);
    out.output = os.str();
  }
  out.exit_code = verdict.empty() ? 0 : verdict_exit(verdict, options.assert_verdict);
  return out;
}

}  // namespace dgcm
