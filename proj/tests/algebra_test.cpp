#include <random>

#include "corpus.hpp"
#include "dgcm/error.hpp"
#include "dgcm/ideal.hpp"
#include "dgcm/module.hpp"
#include "dgcm/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgcm;

namespace {

Poly P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

PresentedModule quotient_of(const RingPtr& r, std::vector<Poly> gens) {
  return PresentedModule(r, {0}, std::move(gens));
}

/// f lies in the span of the degree-d multiples of gens (dense check).
bool dense_member(const RingPtr& r, const std::vector<Poly>& gens, const Poly& f) {
  const int d = f.lead().mono.deg;
  auto pc = oracle::piece(*r, {0}, d);
  auto rows = oracle::span_rows(*r, pc, {0}, gens, d);
  const auto base = oracle::rank(rows, r->characteristic());
  rows.push_back(oracle::dense(pc, {}, f));
  return oracle::rank(rows, r->characteristic()) == base;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.to_signed(6) == -1);
  CHECK(f.sub(2, 5) == 4);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS_AS(PrimeField(32001), UnsupportedInput);
  CHECK_THROWS_AS(PrimeField(0), UnsupportedInput);
  PrimeField big(2147483647u);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("rings and monomial order") {
  auto r = make_ring(32003, {"x", "y", "z"}, {1, 2, 3});
  CHECK(r->nvars() == 3);
  CHECK_FALSE(r->standard_grading());
  CHECK(r->index_of("z") == 2);
  CHECK_FALSE(r->index_of("w").has_value());
  CHECK(r->variable(2).deg == 3);
  CHECK_THROWS(make_ring(32003, {"x", "x"}));
  CHECK_THROWS(make_ring(32003, {"x"}, {0}));
  // grevlex: x^2 > xy > y^2 > xz in k[x,y,z]
  auto s = make_ring(32003, {"x", "y", "z"});
  Poly f = P("x*z + y^2 + x*y + x^2", *s);
  CHECK(to_string(f, *s) == "x^2 + x*y + y^2 + x*z");
}

TEST_CASE("polynomial parsing") {
  auto r = make_ring(101, {"x", "y"});
  CHECK(to_string(P("(x+y)^2", *r), *r) == "x^2 + 2*x*y + y^2");
  CHECK(to_string(P("3*x - 104*x", *r), *r) == "0");
  CHECK(to_string(P("-x*y*-2", *r), *r) == "2*x*y");
  CHECK(P("x*y", *r) == P("y*x", *r));
  try {
    P("x + w", *r);
    FAIL("accepted an unknown variable");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(P("x +", *r), ParseError);
  CHECK_THROWS_AS(P("x^-1", *r), ParseError);
  CHECK_THROWS_AS(P("(x", *r), ParseError);
}

TEST_CASE("polynomial arithmetic") {
  auto r = make_ring(32003, {"x", "y"});
  const auto& f = r->field();
  Poly a = P("x + y", *r), b = P("x - y", *r);
  CHECK(mul(a, b, f) == P("x^2 - y^2", *r));
  CHECK(pow(a, 3, f) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", *r));
  CHECK(add(a, neg(a, f), f).is_zero());
  CHECK(homogeneous_degree(P("x^2 + x*y", *r)) == 2);
  CHECK_FALSE(homogeneous_degree(P("x^2 + y", *r)).has_value());
  CHECK(is_monomial(P("3*x*y", *r)));
  CHECK_FALSE(is_monomial(P("x + y", *r)));
  Poly v = from_components(std::vector<Poly>{a, b}, f);
  auto parts = to_components(v, 2);
  CHECK(parts[0] == a);
  CHECK(parts[1] == b);
}

TEST_CASE("groebner bases agree with dense linear algebra") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = corpus::ring(static_cast<std::size_t>(corpus::pick(rng, 2, 3)));
    Ideal i = corpus::ideal(r, rng);
    const auto& gb = i.groebner_basis();
    CAPTURE(i.to_string());
    for (const auto& g : gb.elements()) CHECK(dense_member(r, i.generators(), g));
    std::vector<Poly> initial;
    for (const auto& m : gb.leading_monomials()) initial.push_back(Poly::term(m, 1));
    auto m = quotient_of(r, i.generators());
    auto in = quotient_of(r, initial);
    for (int d = 0; d <= 7; ++d) {
      CAPTURE(d);
      CHECK(oracle::hilbert(m, d) == oracle::hilbert(in, d));
      CHECK(hilbert_function(m, d) == oracle::hilbert(m, d));
    }
    std::vector<Poly> reversed(i.generators().rbegin(), i.generators().rend());
    CHECK(Ideal(r, reversed).groebner_basis() == gb);
  }
}

TEST_CASE("groebner basis of a binomial ideal") {
  auto r = make_ring(32003, {"x", "y", "z"});
  Ideal i = Ideal::parse(r, {"x^2 - y*z", "x*y - z^2"});
  CHECK(i.contains(P("x*z^2 - y^2*z", *r)));
  CHECK(i.contains(P("y^3*z - z^4", *r)));
  CHECK_FALSE(i.contains(P("x*z", *r)));
  CHECK(normal_form(P("x^2", *r), i.groebner_basis(), *r) == P("y*z", *r));
  CHECK(ideal_dimension(i) == 1);
}

TEST_CASE("ideal operations") {
  auto r = make_ring(32003, {"x", "y", "z"});
  Ideal a = Ideal::parse(r, {"x*y", "x*z"});
  Ideal b = Ideal::parse(r, {"x*z", "x*y", "x*y + x*z"});
  CHECK(a == b);
  CHECK((a + Ideal::parse(r, {"x"})) == Ideal::parse(r, {"x"}));
  CHECK(a.is_monomial());
  CHECK(Ideal::parse(r, {"x", "z"}).is_variable_ideal());
  CHECK_FALSE(Ideal::parse(r, {"x^2"}).is_variable_ideal());
  CHECK(Ideal::parse(r, {"x - 1"}).with(P("x", *r)).is_unit());
  CHECK(Ideal(r).is_zero());
  CHECK(Ideal(r).to_string() == "(0)");
  CHECK(ideal_dimension(Ideal::unit(r)) == -1);
  CHECK(ideal_dimension(Ideal::irrelevant(r)) == 0);
  CHECK_FALSE(Ideal::parse(r, {"x + y^2"}).is_homogeneous());
}

TEST_CASE("krull dimension and minimal primes agree with oracles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = corpus::ring(static_cast<std::size_t>(corpus::pick(rng, 1, 3)));
    Ideal i = corpus::ideal(r, rng, trial % 2 == 0);
    CAPTURE(i.to_string());
    CHECK(ideal_dimension(i) == oracle::krull_dim(quotient_of(r, i.generators())));
    if (!i.is_monomial() || i.is_zero()) continue;
    auto primes = monomial_minimal_primes(Ideal(r, i.groebner_basis().elements()));
    auto expected = oracle::monomial_minimal_primes(*r, i.groebner_basis().elements());
    REQUIRE(primes.size() == expected.size());
    for (const auto& vars : expected) {
      std::vector<Poly> gens;
      for (int v : vars) gens.push_back(variable(*r, static_cast<std::size_t>(v)));
      Ideal q(r, gens);
      CHECK(std::any_of(primes.begin(), primes.end(), [&](const Ideal& p) { return p == q; }));
    }
  }
  auto r = make_ring(32003, {"x", "y", "z"});
  CHECK_THROWS_AS(monomial_minimal_primes(Ideal::parse(r, {"x - y"})), UnsupportedInput);
  CHECK_FALSE(minimal_primes_if_monomial(Ideal::parse(r, {"x^2 - y^2"})).has_value());
  auto primes = monomial_minimal_primes(Ideal::parse(r, {"y^2*z", "x*y*z"}));
  CHECK(primes.size() == 2);
}
