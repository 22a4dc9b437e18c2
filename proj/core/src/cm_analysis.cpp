#include "dgcm/cm_analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgcm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CM: return "CM";
    case Verdict::NotCM: return "NOT_CM";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ExtendedInt CMVerdict::quantity(const std::string& name) const {
  for (const auto& q : certificate)
    if (q.name == name) return q.value;
  throw std::out_of_range("no certificate entry " + name);
}

int DualizingModel::dim_at(int i) const {
  for (const auto& e : table)
    if (e.degree == i) return e.krull_dim;
  return -1;
}

namespace {

void require_nonpositive(const DGRingModel& a, const char* what) {
  if (a.nonnegative()) {
    throw PreconditionError(std::string(what) + ": non-negative model; use check_cm_nonneg");
  }
}

void require_positive_degree(const Poly& x, const char* what) {
  auto d = homogeneous_degree(x);
  if (x.is_zero() || !d) throw UnsupportedInput(std::string(what) + ": element must be homogeneous and nonzero");
  if (*d <= 0) throw UnsupportedInput(std::string(what) + ": element must lie in the irrelevant ideal");
}

int dualizing_shift(const DGRingModel& a) {
  const auto& ext = a.ext_modules();
  const int n = static_cast<int>(a.ring().nvars());
  for (const auto& [j, e] : ext) {
    if (!e.is_zero()) return j - n + a.dim_h0();
  }
  throw DegenerateInput("dualizing model of a zero complex");
}

std::string describe(const ExtendedInt& a, const char* op, const ExtendedInt& b) {
  return a.to_string() + " " + op + " " + b.to_string();
}

std::vector<std::pair<int, Ideal>> annihilators(const std::vector<CohomologyEntry>& table) {
  std::vector<std::pair<int, Ideal>> out;
  for (const auto& e : table) out.emplace_back(e.degree, annihilator(e.module));
  return out;
}

int span_containing(const std::vector<std::pair<int, Ideal>>& anns, const Ideal& p, bool& any) {
  int lo = 0, hi = 0;
  any = false;
  for (const auto& [deg, ann] : anns) {
    if (!p.contains(ann)) continue;
    if (!any) lo = hi = deg;
    lo = std::min(lo, deg);
    hi = std::max(hi, deg);
    any = true;
  }
  return hi - lo;
}

CMVerdict cm_at_prime(const DGRingModel& a, const Ideal& p, const std::vector<std::pair<int, Ideal>>& ann_a,
                      const std::vector<std::pair<int, Ideal>>& ann_r) {
  if (p.is_unit()) throw StructuralError("check_cm_at_prime: the prime is the unit ideal");
  if (!p.is_homogeneous()) throw UnsupportedInput("check_cm_at_prime: " + p.to_string() + " is not homogeneous");
  if (!p.contains(a.h0_ideal())) {
    throw NotInSpectrum("prime " + p.to_string() + " does not contain the H^0 ideal " + a.h0_ideal().to_string());
  }
  bool any_a = false, any_r = false;
  int amp_a = span_containing(ann_a, p, any_a);
  int amp_r = span_containing(ann_r, p, any_r);
  CMVerdict v;
  v.route = "localized_dualizing_amplitude";
  v.certificate = {{"amp_localized", amp_a}, {"amp_dualizing_localized", amp_r}};
  v.verdict = (any_a && any_r && amp_a == amp_r) ? Verdict::CM : Verdict::NotCM;
  if (!p.is_variable_ideal()) v.notes.push_back("primality of " + p.to_string() + " is assumed");
  if (a.construction() == Construction::ExplicitComplex)
    v.notes.push_back("DG structure of the explicit complex is asserted, not verified");
  return v;
}

std::vector<Mono> monomials_of_degree(const Ring& ring, int degree) {
  std::vector<Mono> out;
  Mono cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == ring.nvars()) {
      if (left == 0) {
        cur.deg = degree;
        out.push_back(cur);
      }
      return;
    }
    for (int e = 0; e * ring.weight(i) <= left; ++e) {
      cur.exp[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e * ring.weight(i));
    }
    cur.exp[i] = 0;
  };
  rec(0, degree);
  return out;
}

}  // namespace

DualizingModel dualizing_dg(const DGRingModel& a) {
  DualizingModel r;
  r.shift = dualizing_shift(a);
  const int n = static_cast<int>(a.ring().nvars());
  for (const auto& [j, e] : a.ext_modules()) {
    if (e.is_zero()) continue;
    PresentedModule m = prune(e);
    int dim = module_krull_dim(m);
    r.table.push_back({j - n - r.shift, std::move(m), dim});
  }
  return r;
}

Complex dualizing_complex(const DGRingModel& a) {
  const int n = static_cast<int>(a.ring().nvars());
  return dual_into_base(resolve_complex(a.complex()).free, n + dualizing_shift(a));
}

CMVerdict check_local_cm(const DGRingModel& a) {
  require_nonpositive(a, "check_local_cm");
  InvariantBundle b = compute_invariants(a);
  const int ramp = b.rgamma.amplitude();
  const bool by_amp = ramp == b.amp;
  const bool by_depth = b.seq_depth == b.dim_h0;
  CMVerdict v;
  v.route = "rgamma_amplitude";
  v.verdict = by_amp ? Verdict::CM : Verdict::NotCM;
  v.routes_agree = by_amp == by_depth;
  v.certificate = {{"amp", b.amp},
                   {"rgamma_amp", ramp},
                   {"seq_depth", b.seq_depth},
                   {"dim_h0", b.dim_h0},
                   {"depth", b.depth},
                   {"inf", b.inf}};
  if (!v.routes_agree) v.notes.push_back("amplitude route and sequential-depth route disagree");
  return v;
}

CMVerdict check_cm_via_dualizing(const DGRingModel& a) {
  require_nonpositive(a, "check_cm_via_dualizing");
  DualizingModel r = dualizing_dg(a);
  CMVerdict v;
  v.route = "dualizing_amplitude";
  v.verdict = r.amp() == a.amp() ? Verdict::CM : Verdict::NotCM;
  v.certificate = {{"amp", a.amp()}, {"amp_dualizing", r.amp()}, {"dualizing_shift", r.shift}};
  return v;
}

CMVerdict check_cm_module(const DGRingModel& a, const DGModuleModel& m) {
  if (m.is_zero()) throw DegenerateInput("check_cm_module: zero DG-module");
  const int amp_m = m.amp();
  const int ramp = rgamma_amp(m);
  CMVerdict v;
  v.route = "module_amplitudes";
  v.verdict = (amp_m == a.amp() && a.amp() == ramp) ? Verdict::CM : Verdict::NotCM;
  v.certificate = {{"amp_module", amp_m}, {"amp_ring", a.amp()}, {"rgamma_amp_module", ramp}};
  return v;
}

CMVerdict check_mcm_module(const DGRingModel& a, const DGModuleModel& m) {
  CMVerdict cm = check_cm_module(a, m);
  if (cm.verdict != Verdict::CM) throw PreconditionError("check_mcm_module: the DG-module is not CM");
  ExtendedInt lc = lc_dim(m);
  const int target = m.sup() + a.dim_h0();
  CMVerdict v;
  v.route = "lc_dim_equals_sup_plus_dim";
  v.verdict = lc == ExtendedInt(target) ? Verdict::CM : Verdict::NotCM;
  v.certificate = {{"lc_dim", lc}, {"sup", m.sup()}, {"dim_h0", a.dim_h0()}};
  return v;
}

bool is_regular_element(const DGRingModel& a, const Poly& x) {
  require_positive_degree(x, "is_regular_element");
  if (a.cohomology_table().empty()) return true;
  return multiplication_injective(a.cohomology_table().front().module, x);
}

bool is_regular_element(const DGModuleModel& m, const Poly& x) {
  require_positive_degree(x, "is_regular_element");
  if (m.is_zero()) return true;
  return multiplication_injective(m.cohomology_table().front().module, x);
}

RegSeqCertificate find_regular_sequence(const DGRingModel& a, bool want_sop, std::uint64_t seed, int max_tries) {
  require_nonpositive(a, "find_regular_sequence");
  const Ring& ring = a.ring();
  const auto& field = ring.field();
  int degree = 1;
  for (int w : ring.weights()) degree = std::lcm(degree, w);
  const std::vector<Mono> monos = monomials_of_degree(ring, degree);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, ring.characteristic() - 1);
  auto random_form = [&] {
    for (;;) {
      std::vector<Term> terms;
      for (const auto& m : monos) terms.push_back({m, static_cast<Coeff>(coeff(rng))});
      Poly p = Poly::from_terms(std::move(terms), field);
      if (!p.is_zero()) return p;
    }
  };

  RegSeqCertificate cert;
  DGRingModel current = a;
  for (;;) {
    const PresentedModule h = current.cohomology(current.inf());
    const int dim = current.dim_h0();
    if (has_nonzero_socle(h)) {
      cert.maximal = true;
      break;
    }
    if (want_sop && dim == 0) break;
    bool accepted = false;
    for (int t = 0; t < max_tries && !accepted; ++t) {
      Poly x = random_form();
      ++cert.candidates_tried;
      if (!multiplication_injective(h, x)) continue;
      if (want_sop && ideal_dimension(current.h0_ideal().with(x)) != dim - 1) continue;
      DGRingModel next = dg_quotient(current, x);
      cert.steps.push_back({x, true, dim, next.dim_h0(), current.amp(), next.amp(), next.inf()});
      cert.sequence.push_back(x);
      current = next;
      accepted = true;
    }
    if (!accepted) {
      cert.system_of_parameters = current.dim_h0() == 0;
      throw IncompleteSearch("find_regular_sequence: no candidate accepted after " + std::to_string(max_tries) +
                                 " tries at step " + std::to_string(cert.sequence.size() + 1),
                             cert);
    }
  }
  cert.system_of_parameters = current.dim_h0() == 0;
  return cert;
}

bool supp_contains(const PresentedModule& m, const Ideal& p) {
  if (p.is_unit()) throw StructuralError("supp_contains: the prime is the unit ideal");
  if (m.is_zero()) return false;
  return p.contains(annihilator(m));
}

CMVerdict check_cm_at_prime(const DGRingModel& a, const Ideal& p) {
  require_nonpositive(a, "check_cm_at_prime");
  if (!(a.ring() == p.ring())) throw StructuralError("check_cm_at_prime: ring mismatch");
  return cm_at_prime(a, p, annihilators(a.cohomology_table()), annihilators(dualizing_dg(a).table));
}

GlobalCMResult check_cm_global(const DGRingModel& a, const std::vector<Ideal>& user_primes) {
  require_nonpositive(a, "check_cm_global");
  const auto ann_a = annihilators(a.cohomology_table());
  const auto ann_r = annihilators(dualizing_dg(a).table);
  std::vector<Ideal> anns;
  for (const auto* list : {&ann_a, &ann_r}) {
    for (const auto& [deg, ann] : *list) {
      if (std::none_of(anns.begin(), anns.end(), [&](const Ideal& i) { return i == ann; })) anns.push_back(ann);
    }
  }

  GlobalCMResult out;
  std::vector<Ideal> candidates;
  auto add_candidate = [&](const Ideal& p) {
    if (std::none_of(candidates.begin(), candidates.end(), [&](const Ideal& q) { return q == p; }))
      candidates.push_back(p);
  };
  if (anns.size() > 16) {
    out.uncovered = anns;
  } else {
    for (std::size_t mask = 0; mask < (std::size_t{1} << anns.size()); ++mask) {
      Ideal sum = a.h0_ideal();
      for (std::size_t k = 0; k < anns.size(); ++k)
        if (mask >> k & 1u) sum = sum + anns[k];
      if (sum.is_unit()) continue;
      auto primes = minimal_primes_if_monomial(sum);
      if (!primes) {
        if (std::none_of(out.uncovered.begin(), out.uncovered.end(), [&](const Ideal& i) { return i == sum; }))
          out.uncovered.push_back(sum);
        continue;
      }
      for (const auto& p : *primes) add_candidate(p);
    }
  }
  add_candidate(Ideal::irrelevant(a.ring_ptr()));
  std::vector<std::string> skipped;
  for (const auto& p : user_primes) {
    if (p.contains(a.h0_ideal()) && !p.is_unit()) add_candidate(p);
    else skipped.push_back(p.to_string());
  }

  bool failed = false;
  for (const auto& p : candidates) {
    CMVerdict v = cm_at_prime(a, p, ann_a, ann_r);
    failed = failed || v.verdict == Verdict::NotCM;
    out.checked.emplace_back(p, std::move(v));
  }

  CMVerdict& v = out.verdict;
  v.route = "stratified_primes";
  v.certificate = {{"primes_checked", static_cast<int>(candidates.size())},
                   {"strata_uncovered", static_cast<int>(out.uncovered.size())}};
  for (const auto& s : skipped) v.notes.push_back("user prime " + s + " does not contain the H^0 ideal; skipped");
  if (failed) {
    v.verdict = Verdict::NotCM;
    for (const auto& [p, pv] : out.checked)
      if (pv.verdict == Verdict::NotCM) v.notes.push_back("fails at " + p.to_string());
  } else if (!out.uncovered.empty() && user_primes.empty()) {
    v.verdict = Verdict::Unknown;
    for (const auto& i : out.uncovered) v.notes.push_back("minimal primes not enumerated for " + i.to_string());
  } else {
    v.verdict = Verdict::CM;
    if (!out.uncovered.empty()) v.notes.push_back("non-monomial strata covered by user-supplied primes");
  }
  return out;
}

TrivExtReport check_triv_ext_cm(const Ideal& base, const PresentedModule& m, int s) {
  DGRingModel model = build_trivial_extension(base, m, s);
  const PresentedModule& mod = *model.extension_module();
  TrivExtReport r;
  DGModuleModel shifted(model, Complex::single(mod, -s));
  r.sup_negative = shifted.sup() < 0;
  r.lc_dim_m = lc_dim(shifted);
  r.inf_m = shifted.inf();
  r.dim_base = ideal_dimension(base);
  r.depth_base = depth(Complex::single(PresentedModule::cyclic(base), 0));
  r.lc_dim_equals_inf_plus_dim = r.lc_dim_m == ExtendedInt(r.inf_m + r.dim_base);
  r.lc_dim_below_depth = r.lc_dim_m <= r.depth_base;
  r.depth_m = depth(Complex::single(mod, 0));
  r.module_cm = r.depth_m == ExtendedInt(module_krull_dim(mod));
  r.direct = check_local_cm(model);
  if (r.hypotheses_hold()) {
    const Verdict predicted = r.module_cm ? Verdict::CM : Verdict::NotCM;
    r.theorem_agrees = predicted == r.direct.verdict;
  }
  return r;
}

CMVerdict check_cm_nonneg(const DGRingModel& a) {
  if (!a.nonnegative()) throw PreconditionError("check_cm_nonneg: non-positive model; use check_local_cm");
  InvariantBundle b = compute_invariants(a);
  const int dim_sup = b.cohomology_dims.at(b.sup);
  const int ramp = b.rgamma.amplitude();
  const bool cond1 = dim_sup == b.dim_h0;
  const bool cond2 = ramp == b.amp;
  CMVerdict v;
  v.route = "nonnegative_conditions";
  v.verdict = cond1 && cond2 ? Verdict::CM : Verdict::NotCM;
  v.certificate = {{"dim_h_sup", dim_sup}, {"dim_h0", b.dim_h0}, {"rgamma_amp", ramp}, {"amp", b.amp},
                   {"condition_1", cond1 ? 1 : 0}, {"condition_2", cond2 ? 1 : 0}};
  if (!cond1) v.notes.push_back("condition (1) fails: dim H^sup != dim H^0");
  if (!cond2) v.notes.push_back("condition (2) fails: amp of local cohomology != amp");
  return v;
}

DualizingStructureReport dualizing_structure_report(const DGRingModel& a) {
  DualizingStructureReport rep;
  rep.model = dualizing_dg(a);
  rep.dim_h0 = a.dim_h0();
  rep.amp = a.amp();
  const auto& r = rep.model;
  const int d = rep.dim_h0;
  const int n = rep.amp;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  add("dualizing_normalized", r.inf() == -d, "inf " + std::to_string(r.inf()) + " vs -" + std::to_string(d));
  add("dualizing_inf_dim", r.dim_at(r.inf()) == d,
      "dim H^inf(R) = " + std::to_string(r.dim_at(r.inf())) + ", dim H^0(A) = " + std::to_string(d));
  bool bounds = true;
  std::ostringstream os;
  for (int i = 0; i <= d; ++i) {
    const int dim = r.dim_at(n - i);
    os << (i ? ", " : "") << "dim H^" << n - i << " = " << dim << " <= " << i;
    bounds = bounds && dim <= i;
  }
  add("dualizing_dim_bounds", bounds, os.str());
  if (!a.nonnegative()) {
    const bool cm = check_local_cm(a).verdict == Verdict::CM;
    const int dim_sup = r.dim_at(r.sup());
    add("dualizing_sup_dim_iff_cm", cm == (dim_sup == d),
        std::string(cm ? "CM" : "not CM") + ", dim H^sup(R) = " + std::to_string(dim_sup));
    ExtendedInt lc = lc_dim(r.table);
    add("dualizing_lc_dim_iff_cm", cm == (lc == ExtendedInt(r.sup() + d)),
        std::string(cm ? "CM" : "not CM") + ", lc.dim(R) = " + lc.to_string() + ", sup(R) + d = " +
            std::to_string(r.sup() + d));
  }
  return rep;
}

bool DualizingStructureReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

std::vector<NamedCheck> verify_theorem_suite(const DGRingModel& a) {
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  InvariantBundle b = compute_invariants(a);
  const int d = b.dim_h0;
  const int ramp = b.rgamma.amplitude();

  add("lc_dim_duality", b.lc_dim == b.lc_dim_via_duality, describe(b.lc_dim, "==", b.lc_dim_via_duality));
  add("lc_dim_bounds", ExtendedInt(b.sup) <= b.lc_dim && b.lc_dim <= ExtendedInt(b.sup + d),
      std::to_string(b.sup) + " <= " + b.lc_dim.to_string() + " <= " + std::to_string(b.sup + d));
  bool annihilates = true;
  for (const auto& e : a.cohomology_table())
    annihilates = annihilates && annihilator(e.module).contains(a.h0_ideal());
  add("h0_ideal_annihilates", annihilates, "J H^i = 0 for every i");
  if (a.nonnegative()) return out;

  if (!a.cohomology(0).is_zero()) {
    add("lc_dim_of_ring", b.lc_dim == ExtendedInt(d), describe(b.lc_dim, "==", d));
  }
  add("amplitude_sandwich", b.amp <= ramp && ramp <= b.amp + d,
      std::to_string(b.amp) + " <= " + std::to_string(ramp) + " <= " + std::to_string(b.amp + d));
  add("depth_lower_bound", b.depth >= ExtendedInt(b.inf), describe(b.depth, ">=", b.inf));
  const int dim_inf = b.cohomology_dims.at(b.inf);
  add("depth_upper_bound", b.depth <= ExtendedInt(dim_inf + b.inf), describe(b.depth, "<=", dim_inf + b.inf));
  add("seq_depth_identity", ExtendedInt(b.seq_depth + b.inf) == b.depth,
      std::to_string(b.seq_depth) + " == " + b.depth.to_string() + " - " + std::to_string(b.inf));
  add("seq_depth_at_most_dim", b.seq_depth <= d, std::to_string(b.seq_depth) + " <= " + std::to_string(d));

  CMVerdict local = check_local_cm(a);
  const bool cm = local.verdict == Verdict::CM;
  add("route_agreement", local.routes_agree,
      "rgamma_amp == amp: " + std::string(ramp == b.amp ? "yes" : "no") +
          ", seq_depth == dim H^0: " + std::string(b.seq_depth == d ? "yes" : "no"));

  DualizingModel r = dualizing_dg(a);
  add("dualizing_amplitude", b.amp <= r.amp() && r.amp() <= b.amp + d,
      std::to_string(b.amp) + " <= " + std::to_string(r.amp()) + " <= " + std::to_string(b.amp + d));
  add("cm_by_dualizing", (r.amp() == b.amp) == cm,
      "amp(R) = " + std::to_string(r.amp()) + ", verdict " + to_string(local.verdict));
  for (auto& c : dualizing_structure_report(a).checks) out.push_back(std::move(c));

  if (cm) add("cm_inf_dim", dim_inf == d, "dim H^inf = " + std::to_string(dim_inf) + ", dim H^0 = " + std::to_string(d));
  if (d == 0) {
    std::set<int> support;
    for (const auto& [deg, dim] : b.cohomology_dims) support.insert(deg);
    add("zero_dim_profile", support == b.rgamma.degrees, "profile equals cohomological support");
    add("zero_dim_is_cm", cm, "dim H^0 = 0");
  }
  return out;
}

}  // namespace dgcm
