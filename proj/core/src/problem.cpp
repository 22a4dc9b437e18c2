#include "dgcm/problem.hpp"

#include <json.hpp>

#include "dgcm/error.hpp"
#include "dgcm/parse.hpp"

namespace dgcm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Line and column (1-based) of the first occurrence of `needle` in `text`.
std::pair<int, int> locate(std::string_view text, std::string_view needle, std::size_t from = 0) {
  std::size_t pos = needle.empty() ? std::string_view::npos : text.find(needle, from);
  if (pos == std::string_view::npos) return {0, 0};
  int line = 1, col = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what, std::string_view near) const {
    auto [line, col] = locate(text_, near);
    throw ParseError(what, line, col);
  }
  [[noreturn]] void fail_key(const std::string& what, const std::string& key) const {
    fail(what, "\"" + key + "\"");
  }

  const json& field(const json& obj, const std::string& key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail_key("missing field \"" + key + "\"", key);
    return *it;
  }

  std::string string(const json& v, const std::string& key) const {
    if (!v.is_string()) fail_key("field \"" + key + "\" must be a string", key);
    return v.get<std::string>();
  }

  long long integer(const json& v, const std::string& key) const {
    if (!v.is_number_integer()) fail_key("field \"" + key + "\" must be an integer", key);
    return v.get<long long>();
  }

  std::vector<std::string> strings(const json& v, const std::string& key) const {
    if (!v.is_array()) fail_key("field \"" + key + "\" must be a list of strings", key);
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(string(e, key));
    return out;
  }

  std::vector<int> ints(const json& v, const std::string& key) const {
    if (!v.is_array()) fail_key("field \"" + key + "\" must be a list of integers", key);
    std::vector<int> out;
    for (const auto& e : v) out.push_back(static_cast<int>(integer(e, key)));
    return out;
  }

  std::vector<std::vector<std::string>> columns(const json& v, const std::string& key) const {
    if (!v.is_array()) fail_key("field \"" + key + "\" must be a list of columns", key);
    std::vector<std::vector<std::string>> out;
    for (const auto& c : v) out.push_back(strings(c, key));
    return out;
  }

  int degree_key(const std::string& k, const std::string& key) const {
    try {
      std::size_t used = 0;
      int d = std::stoi(k, &used);
      if (used == k.size()) return d;
    } catch (const std::exception&) {
    }
    fail_key("degree keys of \"" + key + "\" must be integers", key);
  }

  ModuleDescriptor module(const json& v, const std::string& key) const {
    if (!v.is_object()) fail_key("field \"" + key + "\" must be a module descriptor", key);
    ModuleDescriptor d;
    if (v.contains("quotient")) {
      d.kind = ModuleDescriptor::Kind::Quotient;
      d.generators = strings(v["quotient"], "quotient");
      d.degrees = {v.contains("degree") ? static_cast<int>(integer(v["degree"], "degree")) : 0};
    } else if (v.contains("ideal")) {
      d.kind = ModuleDescriptor::Kind::Ideal;
      d.generators = strings(v["ideal"], "ideal");
    } else if (v.contains("canonical")) {
      if (!v["canonical"].is_boolean() || !v["canonical"].get<bool>()) fail_key("\"canonical\" must be true", "canonical");
      d.kind = ModuleDescriptor::Kind::Canonical;
    } else if (v.contains("free")) {
      d.kind = ModuleDescriptor::Kind::Free;
      d.rank = static_cast<int>(integer(v["free"], "free"));
      if (d.rank < 0) fail_key("\"free\" must be non-negative", "free");
      d.degrees = v.contains("degrees") ? ints(v["degrees"], "degrees") : Degrees(d.rank, 0);
      if (static_cast<int>(d.degrees.size()) != d.rank) fail_key("\"degrees\" must have one entry per generator", "degrees");
    } else if (v.contains("degrees")) {
      d.kind = ModuleDescriptor::Kind::Presented;
      d.degrees = ints(v["degrees"], "degrees");
      if (v.contains("relations")) d.relations = columns(v["relations"], "relations");
      for (const auto& c : d.relations)
        if (c.size() != d.degrees.size()) fail_key("relation columns must have one entry per generator", "relations");
    } else {
      fail_key("unknown module descriptor in \"" + key + "\"", key);
    }
    return d;
  }

  ComplexDescriptor complex(const json& v) const {
    ComplexDescriptor d;
    const json& terms = field(v, "terms");
    if (!terms.is_object()) fail_key("\"terms\" must map degrees to modules", "terms");
    for (auto it = terms.begin(); it != terms.end(); ++it)
      d.terms.emplace(degree_key(it.key(), "terms"), module(it.value(), "terms"));
    if (v.contains("differentials")) {
      const json& diffs = v["differentials"];
      if (!diffs.is_object()) fail_key("\"differentials\" must map degrees to matrices", "differentials");
      for (auto it = diffs.begin(); it != diffs.end(); ++it)
        d.differentials.emplace(degree_key(it.key(), "differentials"), columns(it.value(), "differentials"));
    }
    return d;
  }

 private:
  std::string_view text_;
};

Construction construction_type(const std::string& s, const Reader& r) {
  if (s == "koszul") return Construction::Koszul;
  if (s == "trivial_extension") return Construction::TrivialExtension;
  if (s == "nonneg_trivial_extension") return Construction::NonNegTrivialExtension;
  if (s == "derived_fiber") return Construction::DerivedFiber;
  if (s == "complex") return Construction::ExplicitComplex;
  r.fail("unknown construction type \"" + s + "\"", "\"" + s + "\"");
}

ordered_json module_json(const ModuleDescriptor& d) {
  ordered_json j = ordered_json::object();
  switch (d.kind) {
    case ModuleDescriptor::Kind::Quotient:
      j["quotient"] = d.generators;
      if (d.degrees.at(0) != 0) j["degree"] = d.degrees[0];
      break;
    case ModuleDescriptor::Kind::Ideal: j["ideal"] = d.generators; break;
    case ModuleDescriptor::Kind::Canonical: j["canonical"] = true; break;
    case ModuleDescriptor::Kind::Free:
      j["free"] = d.rank;
      j["degrees"] = d.degrees;
      break;
    case ModuleDescriptor::Kind::Presented:
      j["degrees"] = d.degrees;
      j["relations"] = d.relations;
      break;
  }
  return j;
}

ordered_json complex_json(const ComplexDescriptor& d) {
  ordered_json j;
  ordered_json terms = ordered_json::object();
  for (const auto& [deg, m] : d.terms) terms[std::to_string(deg)] = module_json(m);
  j["terms"] = terms;
  ordered_json diffs = ordered_json::object();
  for (const auto& [deg, cols] : d.differentials) diffs[std::to_string(deg)] = cols;
  j["differentials"] = diffs;
  return j;
}

std::vector<Poly> polys(const std::vector<std::string>& s, const Ring& ring) {
  std::vector<Poly> out;
  for (const auto& g : s) out.push_back(parse_polynomial(g, ring));
  return out;
}

Poly column(const std::vector<std::string>& entries, const Ring& ring) {
  std::vector<Poly> comps = polys(entries, ring);
  return from_components(comps, ring.field());
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto cut = msg.find("syntax error");
    throw ParseError(cut == std::string::npos ? msg : msg.substr(cut), line, col);
  }
  Reader r(text);
  if (!root.is_object()) throw ParseError("a problem file is a JSON object", 1, 1);

  ProblemFile p;
  if (root.contains("name")) p.name = r.string(root["name"], "name");
  if (root.contains("description")) p.description = r.string(root["description"], "description");
  if (root.contains("characteristic")) {
    long long c = r.integer(root["characteristic"], "characteristic");
    if (c <= 1 || c >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(c)))
      r.fail_key("characteristic must be a prime below 2^31", "characteristic");
    p.characteristic = static_cast<std::uint32_t>(c);
    p.characteristic_given = true;
  }
  p.variables = r.strings(r.field(root, "variables"), "variables");
  if (root.contains("weights")) p.weights = r.ints(root["weights"], "weights");
  if (root.contains("ideal")) p.ideal = r.strings(root["ideal"], "ideal");

  const json& c = r.field(root, "construction");
  if (!c.is_object()) r.fail_key("\"construction\" must be an object", "construction");
  auto& cd = p.construction;
  cd.type = construction_type(r.string(r.field(c, "type"), "type"), r);
  switch (cd.type) {
    case Construction::Koszul: cd.elements = r.strings(r.field(c, "elements"), "elements"); break;
    case Construction::TrivialExtension:
    case Construction::NonNegTrivialExtension:
      cd.module = r.module(r.field(c, "module"), "module");
      cd.shift = static_cast<int>(r.integer(r.field(c, "shift"), "shift"));
      break;
    case Construction::DerivedFiber:
    case Construction::Quotient: break;
    case Construction::ExplicitComplex:
      cd.complex = r.complex(c);
      cd.h0_ideal = r.strings(r.field(c, "h0_ideal"), "h0_ideal");
      if (c.contains("nonnegative")) {
        if (!c["nonnegative"].is_boolean()) r.fail_key("\"nonnegative\" must be a boolean", "nonnegative");
        cd.nonnegative = c["nonnegative"].get<bool>();
      }
      break;
  }

  if (root.contains("modules")) {
    const json& mods = root["modules"];
    if (!mods.is_array()) r.fail_key("\"modules\" must be a list", "modules");
    for (const auto& m : mods) {
      if (!m.is_object()) r.fail_key("\"modules\" entries must be objects", "modules");
      DGModuleDescriptor d;
      d.name = m.contains("name") ? r.string(m["name"], "name") : "M" + std::to_string(p.modules.size() + 1);
      if (m.contains("module")) {
        int deg = m.contains("degree") ? static_cast<int>(r.integer(m["degree"], "degree")) : 0;
        d.complex.terms.emplace(deg, r.module(m["module"], "module"));
      } else {
        d.complex = r.complex(m);
      }
      p.modules.push_back(std::move(d));
    }
  }
  if (root.contains("primes")) {
    const json& pr = root["primes"];
    if (!pr.is_array()) r.fail_key("\"primes\" must be a list of generator lists", "primes");
    for (const auto& q : pr) p.primes.push_back(r.strings(q, "primes"));
  }
  if (root.contains("options")) {
    const json& o = root["options"];
    if (!o.is_object()) r.fail_key("\"options\" must be an object", "options");
    if (o.contains("seed")) p.options.seed = static_cast<std::uint64_t>(r.integer(o["seed"], "seed"));
    if (o.contains("max_tries")) p.options.max_tries = static_cast<int>(r.integer(o["max_tries"], "max_tries"));
    if (o.contains("t_max")) p.options.t_max = static_cast<int>(r.integer(o["t_max"], "t_max"));
  }
  if (root.contains("expected")) p.expected = root["expected"].dump();

  // Validate every polynomial against the ring, with file positions.
  RingPtr ring;
  try {
    ring = make_ring(p.characteristic, p.variables, p.weights);
  } catch (const Error& e) {
    r.fail_key(e.what(), p.weights.empty() ? "variables" : "weights");
  }
  auto check = [&](const std::string& s, bool homogeneous) {
    Poly f;
    try {
      f = parse_polynomial(s, *ring);
    } catch (const ParseError& e) {
      auto [line, col] = locate(text, "\"" + s + "\"");
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" (line"));
      throw ParseError(msg + " in \"" + s + "\"", line, line ? col + e.column() : 0);
    }
    if (homogeneous && !homogeneous_degree(f)) r.fail("inhomogeneous polynomial \"" + s + "\"", "\"" + s + "\"");
  };
  auto check_module = [&](const ModuleDescriptor& d) {
    for (const auto& g : d.generators) check(g, true);
    for (const auto& col : d.relations)
      for (const auto& e : col) check(e, false);
  };
  auto check_complex = [&](const ComplexDescriptor& d) {
    for (const auto& [deg, m] : d.terms) check_module(m);
    for (const auto& [deg, cols] : d.differentials)
      for (const auto& col : cols)
        for (const auto& e : col) check(e, false);
  };
  for (const auto& g : p.ideal) check(g, true);
  for (const auto& g : cd.elements) check(g, true);
  for (const auto& g : cd.h0_ideal) check(g, true);
  if (cd.module) check_module(*cd.module);
  if (cd.complex) check_complex(*cd.complex);
  for (const auto& m : p.modules) check_complex(m.complex);
  for (const auto& q : p.primes)
    for (const auto& g : q) check(g, true);
  return p;
}

std::string serialize_problem(const ProblemFile& p) {
  ordered_json j;
  if (!p.name.empty()) j["name"] = p.name;
  if (!p.description.empty()) j["description"] = p.description;
  if (p.characteristic_given) j["characteristic"] = p.characteristic;
  j["variables"] = p.variables;
  if (!p.weights.empty()) j["weights"] = p.weights;
  j["ideal"] = p.ideal;
  const auto& cd = p.construction;
  ordered_json c;
  c["type"] = to_string(cd.type);
  switch (cd.type) {
    case Construction::Koszul: c["elements"] = cd.elements; break;
    case Construction::TrivialExtension:
    case Construction::NonNegTrivialExtension:
      c["module"] = module_json(*cd.module);
      c["shift"] = cd.shift;
      break;
    case Construction::DerivedFiber:
    case Construction::Quotient: break;
    case Construction::ExplicitComplex: {
      ordered_json cx = complex_json(*cd.complex);
      c["terms"] = cx["terms"];
      c["differentials"] = cx["differentials"];
      c["h0_ideal"] = cd.h0_ideal;
      if (cd.nonnegative) c["nonnegative"] = true;
      break;
    }
  }
  j["construction"] = c;
  if (!p.modules.empty()) {
    ordered_json mods = ordered_json::array();
    for (const auto& m : p.modules) {
      ordered_json e = complex_json(m.complex);
      e["name"] = m.name;
      mods.push_back(e);
    }
    j["modules"] = mods;
  }
  if (!p.primes.empty()) j["primes"] = p.primes;
  j["options"] = {{"seed", p.options.seed}, {"max_tries", p.options.max_tries}, {"t_max", p.options.t_max}};
  if (!p.expected.empty()) j["expected"] = ordered_json::parse(p.expected);
  return j.dump(2) + "\n";
}

PresentedModule build_module(const ModuleDescriptor& d, const Ideal& base) {
  const Ring& ring = base.ring();
  switch (d.kind) {
    case ModuleDescriptor::Kind::Quotient:
      return PresentedModule::over_quotient(base, d.degrees, polys(d.generators, ring));
    case ModuleDescriptor::Kind::Ideal: return PresentedModule::ideal_module(base, polys(d.generators, ring));
    case ModuleDescriptor::Kind::Canonical: return canonical_module(base);
    case ModuleDescriptor::Kind::Free: return PresentedModule::over_quotient(base, d.degrees, {});
    case ModuleDescriptor::Kind::Presented: {
      std::vector<Poly> rels;
      for (const auto& c : d.relations) rels.push_back(column(c, ring));
      return PresentedModule::over_quotient(base, d.degrees, std::move(rels));
    }
  }
  throw StructuralError("unknown module descriptor");
}

Complex build_complex(const ComplexDescriptor& d, const Ideal& base) {
  if (d.terms.empty()) return Complex::zero(base.ring_ptr());
  const Ring& ring = base.ring();
  const int lo = d.terms.begin()->first;
  const int hi = d.terms.rbegin()->first;
  std::vector<PresentedModule> terms;
  for (int i = lo; i <= hi; ++i) {
    auto it = d.terms.find(i);
    terms.push_back(it == d.terms.end() ? PresentedModule::zero(base.ring_ptr()) : build_module(it->second, base));
  }
  for (const auto& [deg, cols] : d.differentials) {
    if (deg < lo || deg >= hi) throw StructuralError("differential from degree " + std::to_string(deg) + " leaves the complex");
  }
  std::vector<Matrix> diffs;
  for (int i = lo; i < hi; ++i) {
    const auto& src = terms[static_cast<std::size_t>(i - lo)];
    const auto& tgt = terms[static_cast<std::size_t>(i - lo + 1)];
    auto it = d.differentials.find(i);
    if (it == d.differentials.end()) {
      diffs.push_back(Matrix::zero(tgt.rank(), src.rank()));
      continue;
    }
    Matrix m;
    m.rows = tgt.rank();
    for (const auto& c : it->second) {
      if (c.size() != tgt.rank()) throw StructuralError("differential column has the wrong length");
      m.columns.push_back(column(c, ring));
    }
    if (m.cols() != src.rank()) throw StructuralError("differential has the wrong number of columns");
    diffs.push_back(std::move(m));
  }
  return Complex(base.ring_ptr(), lo, std::move(terms), std::move(diffs));
}

Problem build_problem(const ProblemFile& file, std::optional<std::uint32_t> characteristic) {
  RingPtr ring = make_ring(characteristic.value_or(file.characteristic), file.variables, file.weights);
  Ideal base(ring, polys(file.ideal, *ring));
  const auto& cd = file.construction;
  auto model = [&]() -> DGRingModel {
    switch (cd.type) {
      case Construction::Koszul: return build_koszul_dg(base, polys(cd.elements, *ring));
      case Construction::TrivialExtension: return build_trivial_extension(base, build_module(*cd.module, base), cd.shift);
      case Construction::NonNegTrivialExtension:
        return build_nonneg_trivial_extension(base, build_module(*cd.module, base), cd.shift);
      case Construction::DerivedFiber: return build_derived_fiber(base);
      case Construction::ExplicitComplex:
        return DGRingModel::explicit_complex(base, build_complex(*cd.complex, base), Ideal(ring, polys(cd.h0_ideal, *ring)),
                                             cd.nonnegative);
      case Construction::Quotient: break;
    }
    throw StructuralError("construction type cannot be built from a file");
  }();
  Problem p{file, ring, base, model, {}, {}};
  for (const auto& m : file.modules) p.modules.emplace_back(m.name, DGModuleModel(model, build_complex(m.complex, base)));
  for (const auto& q : file.primes) p.primes.emplace_back(ring, polys(q, *ring));
  return p;
}

}  // namespace dgcm
