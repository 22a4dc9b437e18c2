#include <random>

#include "corpus.hpp"
#include "dgcm/error.hpp"
#include "dgcm/invariants.hpp"
#include "dgcm/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgcm;

namespace {

Poly P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

PresentedModule cyclic(const Ideal& i, int degree = 0) { return PresentedModule::cyclic(i, degree); }

std::set<int> table_degrees(const std::vector<CohomologyEntry>& t) {
  std::set<int> s;
  for (const auto& e : t) s.insert(e.degree);
  return s;
}

}  // namespace

TEST_CASE("Koszul models") {
  auto r = make_ring(32003, {"x"});
  Ideal base = Ideal::parse(r, {"x^2"});
  auto a = build_koszul_dg(base, {P("x", *r)});
  CHECK(a.construction() == Construction::Koszul);
  CHECK(a.inf() == -1);
  CHECK(a.sup() == 0);
  CHECK(a.amp() == 1);
  CHECK(a.dim_h0() == 0);
  CHECK(a.h0_ideal() == Ideal::parse(r, {"x"}));
  // H^{-1} = x e with deg e = 1.
  CHECK(oracle::hilbert(a.cohomology(-1), 2) == 1);
  CHECK(oracle::hilbert(a.cohomology(-1), 1) == 0);
  CHECK(oracle::hilbert(a.cohomology(0), 0) == 1);
  CHECK(a.cohomology(-2).is_zero());
  // x regular on k[x,y]: Kos(k[x,y]; x) has H^0 = k[y] only.
  auto s = make_ring(32003, {"x", "y"});
  auto b = build_koszul_dg(Ideal(s), {P("x", *s)});
  CHECK(b.amp() == 0);
  CHECK(b.dim_h0() == 1);
  auto c = dg_quotient(b, P("y", *s));
  CHECK(c.construction() == Construction::Koszul);
  CHECK(c.elements().size() == 2);
  CHECK(c.dim_h0() == 0);
  CHECK_THROWS_AS(build_koszul_dg(Ideal(s), {P("x + y^2", *s)}), UnsupportedInput);
}

TEST_CASE("trivial extensions") {
  auto r = make_ring(32003, {"x", "y"});
  Ideal base = Ideal::parse(r, {"x*y"});
  auto m = cyclic(base + Ideal::parse(r, {"x"}));
  auto a = build_trivial_extension(base, m, 1);
  CHECK(a.construction() == Construction::TrivialExtension);
  CHECK(a.shift() == 1);
  CHECK(a.inf() == -1);
  CHECK(a.sup() == 0);
  CHECK(a.dim_h0() == 1);
  CHECK(a.h0_ideal() == base);
  CHECK(table_degrees(a.cohomology_table()) == std::set<int>{-1, 0});
  CHECK_THROWS_AS(build_trivial_extension(base, m, 0), DegenerateInput);
  CHECK_THROWS_AS(build_trivial_extension(base, m, -1), PreconditionError);
  CHECK_THROWS_AS(build_trivial_extension(base, PresentedModule::zero(r), 1), DegenerateInput);
  auto n = build_nonneg_trivial_extension(base, m, -1);
  CHECK(n.nonnegative());
  CHECK(n.sup() == 1);
  CHECK(n.inf() == 0);
  CHECK_THROWS(build_nonneg_trivial_extension(base, m, 1));
  CHECK_THROWS_AS(dg_quotient(n, P("y", *r)), PreconditionError);
  CHECK_FALSE(a.describe().empty());
}

TEST_CASE("quotients by elements") {
  auto r = make_ring(32003, {"x", "y"});
  Ideal base = Ideal::parse(r, {"x*y"});
  auto a = build_trivial_extension(base, cyclic(base + Ideal::parse(r, {"x"})), 1);
  auto q = dg_quotient(a, P("y", *r));
  CHECK(q.construction() == Construction::Quotient);
  CHECK(q.h0_ideal() == Ideal::parse(r, {"x*y", "y"}));
  // y is regular on H^{-1} = k[y] and on k[x,y]/(xy) modulo x-torsion: amp stays 1.
  CHECK(q.amp() == 1);
  CHECK(q.dim_h0() == 1);
  // Cone long exact sequence on Hilbert functions.
  for (int d = 0; d <= 5; ++d) {
    long long lhs = 0, rhs = 0;
    for (int i = q.inf(); i <= q.sup(); ++i) lhs += (i % 2 == 0 ? 1 : -1) * oracle::hilbert(q.cohomology(i), d);
    for (int i = a.inf(); i <= a.sup(); ++i)
      rhs += (i % 2 == 0 ? 1 : -1) * (oracle::hilbert(a.cohomology(i), d) - oracle::hilbert(a.cohomology(i), d - 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("derived fiber") {
  auto r = make_ring(32003, {"x", "y"});
  auto a = build_derived_fiber(Ideal::parse(r, {"x^2"}));
  CHECK(a.construction() == Construction::DerivedFiber);
  CHECK(a.dim_h0() == 0);
  CHECK(table_degrees(a.cohomology_table()) == std::set<int>{-1, 0});
  CHECK(a.cohomology(-2).is_zero());
}

TEST_CASE("explicit complexes") {
  auto r = make_ring(32003, {"x", "y"});
  Ideal base = Ideal::parse(r, {"x*y"});
  auto f1 = PresentedModule::over_quotient(base, {1}, {});
  auto f0 = PresentedModule::over_quotient(base, {0}, {});
  Complex c(r, -1, {f1, f0}, {Matrix{1, {P("x", *r)}}});
  auto a = DGRingModel::explicit_complex(base, c, Ideal::parse(r, {"x"}));
  CHECK(a.construction() == Construction::ExplicitComplex);
  CHECK(a.dim_h0() == 1);
  CHECK(a.sup() == 0);
  // Wrong H^0 ideal.
  CHECK_THROWS_AS(DGRingModel::explicit_complex(base, c, Ideal::parse(r, {"x", "y"})), PreconditionError);
  // Cohomology on the wrong side for a non-positive model.
  CHECK_THROWS(DGRingModel::explicit_complex(base, shift(c, -2), Ideal::parse(r, {"x"})));
}

TEST_CASE("canonical modules") {
  auto r = make_ring(32003, {"x", "y"});
  // Complete intersections: omega = R(a) with a = sum of generator degrees
  // minus the number of variables.
  for (auto [gens, a] : std::vector<std::pair<std::vector<std::string>, int>>{{{"x*y"}, 0}, {{"y^2"}, 0}, {{}, -2}}) {
    Ideal base = Ideal::parse(r, gens);
    auto w = canonical_module(base);
    for (int d = -3; d <= 5; ++d) CHECK(oracle::hilbert(w, d) == oracle::hilbert(cyclic(base), d + a));
  }
  // k[x,y]/(x^2, xy) differs from k[y] by an embedded point, so omega = k[y](-1).
  auto w = canonical_module(Ideal::parse(r, {"x^2", "x*y"}));
  CHECK(oracle::krull_dim(w) == 1);
  CHECK(oracle::hilbert(w, 0) == 0);
  for (int d = 1; d <= 4; ++d) CHECK(oracle::hilbert(w, d) == 1);
}

TEST_CASE("invariants of trivial extensions match module oracles") {
  // R ⋉ M[s]: H^i_m(A) = H^i_m(R) + H^{i+s}_m(M), so depth(A) = min(depth R,
  // depth M - s) and lc.dim(A) = max(dim R, dim M - s).
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 25) {
    auto r = corpus::ring(static_cast<std::size_t>(corpus::pick(rng, 1, 3)));
    Ideal base = corpus::ideal(r, rng);
    auto m = corpus::module(base, rng);
    const int s = corpus::pick(rng, 1, 2);
    auto a = build_trivial_extension(base, m, s);
    auto rmod = cyclic(base);
    CAPTURE(base.to_string());
    CAPTURE(m.to_string());
    CAPTURE(s);
    const int dr = oracle::depth(rmod), dm = oracle::depth(m);
    const int kr = oracle::krull_dim(rmod), km = oracle::krull_dim(m);
    auto inv = compute_invariants(a);
    CHECK(inv.depth == ExtendedInt(std::min(dr, dm - s)));
    CHECK(inv.lc_dim == ExtendedInt(std::max(kr, km - s)));
    CHECK(inv.lc_dim_via_duality == inv.lc_dim);
    CHECK(inv.dim_h0 == kr);
    CHECK(inv.cohomology_dims.at(0) == kr);
    CHECK(inv.cohomology_dims.at(-s) == km);
    CHECK(inv.seq_depth == inv.depth.value() - inv.inf);
    CHECK(depth_via_koszul(m) == ExtendedInt(dm));
    CHECK(rgamma_profile(Complex::single(m, 0)).min() == ExtendedInt(dm));
    CHECK(rgamma_profile(Complex::single(m, 0)).max() == ExtendedInt(km));
    ++checked;
  }
}

TEST_CASE("local cohomology of small examples") {
  auto r = make_ring(32003, {"x", "y", "z"});
  // k[x,y,z]/(xy, xz): components of dimension 2 and 1, depth 1.
  auto m = cyclic(Ideal::parse(r, {"x*y", "x*z"}));
  auto prof = rgamma_profile(Complex::single(m, 0));
  CHECK(prof.degrees == std::set<int>{1, 2});
  CHECK(prof.amplitude() == 1);
  CHECK(koszul_colimit_profile_oracle(m, 4) == std::set<int>{1, 2});
  auto empty = rgamma_profile(Complex::zero(r));
  CHECK(empty.empty());
  CHECK(empty.min() == ExtendedInt::minus_infinity());
  CHECK(lc_dim(Complex::zero(r)) == ExtendedInt::minus_infinity());
  CHECK(depth(Complex::zero(r)) == ExtendedInt::minus_infinity());
}

TEST_CASE("zero inputs are rejected where the invariant is undefined") {
  auto r = make_ring(32003, {"x"});
  auto a = build_koszul_dg(Ideal(r), {});
  DGModuleModel zero(a, Complex::zero(r));
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.sup(), DegenerateInput);
  CHECK_THROWS_AS(rgamma_amp(zero), DegenerateInput);
  CHECK_THROWS_AS(seq_depth(zero), DegenerateInput);
  CHECK(depth(zero) == ExtendedInt::minus_infinity());
}

TEST_CASE("extended integers") {
  ExtendedInt inf;
  CHECK(inf.is_minus_infinity());
  CHECK(inf < ExtendedInt(-1000));
  CHECK(ExtendedInt(2) > ExtendedInt(1));
  CHECK(inf == ExtendedInt::minus_infinity());
  CHECK(inf.to_string() == "-inf");
  CHECK(ExtendedInt(3).to_string() == "3");
}
