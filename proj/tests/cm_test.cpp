#include "corpus.hpp"
#include "dgcm/cm_analysis.hpp"
#include "dgcm/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgcm;

namespace {

Poly P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

struct RegNotPar {
  RingPtr r = make_ring(32003, {"x", "y"});
  Ideal base = Ideal::parse(r, {"x*y"});
  DGRingModel a = build_trivial_extension(base, PresentedModule::cyclic(base + Ideal::parse(r, {"x"})), 1);
};

struct Localization {
  RingPtr r = make_ring(32003, {"x", "y", "z"});
  Ideal base = Ideal::parse(r, {"y^2*z", "x*y*z"});
  PresentedModule m = PresentedModule::cyclic(base + Ideal::parse(r, {"z"}));
  DGRingModel b = build_trivial_extension(base, m, 2);
};

}  // namespace

TEST_CASE("y is regular but not a parameter") {
  RegNotPar e;
  const auto& r = *e.r;
  CHECK(is_regular_element(e.a, P("y", r)));
  CHECK_FALSE(is_regular_element(e.a, P("x", r)));
  auto q = dg_quotient(e.a, P("y", r));
  CHECK(q.dim_h0() == 1);
  CHECK(e.a.dim_h0() == 1);
  auto v = check_local_cm(e.a);
  CHECK(v.verdict == Verdict::CM);
  CHECK(v.routes_agree);
  CHECK(e.a.amp() == 1);
  CHECK(rgamma_amp(e.a) == 1);
  CHECK(v.quantity("seq_depth") == ExtendedInt(1));
  CHECK(check_cm_via_dualizing(e.a).verdict == Verdict::CM);
  auto plain = find_regular_sequence(e.a, false);
  CHECK(plain.sequence.size() == 1);
  CHECK(plain.maximal);
  auto sop = find_regular_sequence(e.a, true);
  CHECK(sop.sequence.size() == 1);
  CHECK(sop.system_of_parameters);
  CHECK(sop.steps.front().dim_h0_after == 0);
  CHECK(sop.steps.front().amp_after == 1);
}

TEST_CASE("a CM DG-ring with a non-CM localization") {
  Localization e;
  auto rep = check_triv_ext_cm(e.base, e.m, 2);
  CHECK(rep.hypotheses_hold());
  CHECK(rep.module_cm);
  CHECK(rep.theorem_agrees);
  CHECK(rep.direct.verdict == Verdict::CM);
  CHECK(check_local_cm(e.b).verdict == Verdict::CM);
  auto at = check_cm_at_prime(e.b, Ideal::parse(e.r, {"x", "y"}));
  CHECK(at.verdict == Verdict::NotCM);
  auto at_max = check_cm_at_prime(e.b, Ideal::irrelevant(e.r));
  CHECK(at_max.verdict == Verdict::CM);
  auto global = check_cm_global(e.b);
  CHECK(global.verdict.verdict == Verdict::NotCM);
  CHECK(global.uncovered.empty());
  CHECK(e.b.amp() == 2);
}

TEST_CASE("non-negative trivial extension") {
  auto r = make_ring(32003, {"x"});
  Ideal base(r);
  auto a = build_nonneg_trivial_extension(base, PresentedModule::cyclic(Ideal::parse(r, {"x"})), -1);
  CHECK(rgamma_profile(a).degrees == std::set<int>{1});
  CHECK(rgamma_amp(a) == 0);
  CHECK(a.amp() == 1);
  auto v = check_cm_nonneg(a);
  CHECK(v.verdict == Verdict::NotCM);
  CHECK(v.quantity("condition_1") == ExtendedInt(0));
  auto free = build_nonneg_trivial_extension(base, PresentedModule::cyclic(base), -1);
  CHECK(check_cm_nonneg(free).verdict == Verdict::CM);
  CHECK_THROWS_AS(check_local_cm(a), PreconditionError);
  CHECK_THROWS_AS(find_regular_sequence(a, true), PreconditionError);
}

TEST_CASE("Gorenstein rings extended by their canonical module") {
  auto r2 = make_ring(32003, {"x", "y"});
  auto r1 = make_ring(32003, {"x"});
  for (const auto& base : {Ideal(r1), Ideal::parse(r2, {"x*y"}), Ideal::parse(r2, {"y^2"})}) {
    CAPTURE(base.to_string());
    auto w = canonical_module(base);
    auto a = build_trivial_extension(base, w, ideal_dimension(base));
    CHECK(check_local_cm(a).verdict == Verdict::CM);
    // Dualizing over itself: the dualizing table lives in the degrees of R.
    auto d = dualizing_dg(build_koszul_dg(base, {}));
    CHECK(d.amp() == 0);
  }
}

TEST_CASE("zero-dimensional models are CM") {
  auto r = make_ring(32003, {"x"});
  auto kos = build_koszul_dg(Ideal::parse(r, {"x^2"}), {P("x", *r)});
  CHECK(check_local_cm(kos).verdict == Verdict::CM);
  CHECK(rgamma_profile(kos).degrees == std::set<int>{-1, 0});
  auto s = make_ring(32003, {"x", "y"});
  auto fib = build_derived_fiber(Ideal::parse(s, {"x^2"}));
  CHECK(check_local_cm(fib).verdict == Verdict::CM);
  CHECK(rgamma_profile(fib).degrees == std::set<int>{-1, 0});
}

TEST_CASE("a non-CM trivial extension") {
  auto r = make_ring(32003, {"x", "y"});
  Ideal base(r);
  auto m = PresentedModule::ideal_module(base, {P("x", *r), P("y", *r)});
  auto rep = check_triv_ext_cm(base, m, 2);
  CHECK(rep.hypotheses_hold());
  CHECK_FALSE(rep.module_cm);
  CHECK(rep.direct.verdict == Verdict::NotCM);
  CHECK(rep.theorem_agrees);
}

TEST_CASE("dualizing structure") {
  auto r = make_ring(32003, {"x", "y", "z"});
  Ideal base = Ideal::parse(r, {"x*y", "x*z"});
  auto a = build_koszul_dg(base, {});
  auto rep = dualizing_structure_report(a);
  CHECK(rep.all_pass());
  CHECK(rep.model.inf() == -2);
  CHECK(rep.model.amp() == 1);
  CHECK(check_local_cm(a).verdict == Verdict::NotCM);
  CHECK(check_cm_via_dualizing(a).verdict == Verdict::NotCM);
  auto c = dualizing_complex(a);
  for (const auto& e : rep.model.table) CHECK_FALSE(cohomology_at(c, e.degree).is_zero());
}

TEST_CASE("primes outside the spectrum or unsupported") {
  RegNotPar e;
  CHECK_THROWS_AS(check_cm_at_prime(e.a, Ideal::parse(e.r, {"x"}).with(P("x + 1", *e.r))), Error);
  CHECK_THROWS_AS(check_cm_at_prime(e.a, Ideal::parse(e.r, {"x + y"})), NotInSpectrum);
  CHECK(check_cm_at_prime(e.a, Ideal::parse(e.r, {"y"})).verdict == Verdict::CM);
  CHECK(supp_contains(PresentedModule::cyclic(Ideal::parse(e.r, {"x"})), Ideal::parse(e.r, {"x", "y"})));
  CHECK_FALSE(supp_contains(PresentedModule::cyclic(Ideal::parse(e.r, {"x"})), Ideal::parse(e.r, {"y"})));
}

TEST_CASE("module verdicts") {
  RegNotPar e;
  auto self = DGModuleModel::of(e.a);
  CHECK(check_cm_module(e.a, self).verdict == Verdict::CM);
  CHECK(check_mcm_module(e.a, self).verdict == Verdict::CM);
  // k = R/(x, y) in degree 0 is CM but not maximal.
  auto k = DGModuleModel(e.a, Complex::single(PresentedModule::cyclic(Ideal::irrelevant(e.r)), 0));
  CHECK(check_cm_module(e.a, k).verdict == Verdict::NotCM);
}

TEST_CASE("regular sequence search is deterministic") {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto a = build_koszul_dg(Ideal::parse(r, {"x*y - z^2"}), {});
  auto c1 = find_regular_sequence(a, true, 9);
  auto c2 = find_regular_sequence(a, true, 9);
  CHECK(c1.sequence == c2.sequence);
  CHECK(c1.sequence.size() == 2);
  CHECK(c1.system_of_parameters);
  try {
    find_regular_sequence(a, true, 1, 0);
    FAIL("search without candidates succeeded");
  } catch (const IncompleteSearch& err) {
    CHECK(err.partial().sequence.empty());
  }
}

TEST_CASE("theorem suite on the corpus") {
  for (const auto& k : corpus::models(15, 41)) {
    CAPTURE(k.label);
    for (const auto& c : verify_theorem_suite(k.model)) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
}
