#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgcm/groebner.hpp"

namespace dgcm {

enum class MonomialOrder { GradedReverseLex };

/// Ideal of P = k[x_1..x_n] given by generators; the reduced Groebner basis
/// is computed on first use and shared between copies.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Poly> generators = {});
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);
  static Ideal unit(RingPtr ring);
  /// The irrelevant maximal ideal (x_1, ..., x_n).
  static Ideal irrelevant(RingPtr ring);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool is_homogeneous() const;

  const GroebnerBasis& groebner_basis() const;
  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner_basis().has_unit(); }
  bool is_zero() const { return groebner_basis().empty(); }
  /// Equality of ideals (not of generator lists).
  bool operator==(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Poly& f) const;
  /// Generated by monomials (decided on the reduced basis).
  bool is_monomial() const;
  /// Generated by a subset of the variables.
  bool is_variable_ideal() const;

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis.  Generators from a different ring are rejected.
GroebnerBasis gb_compute(const Ideal& ideal, MonomialOrder order = MonomialOrder::GradedReverseLex);
Poly normal_form(const Poly& f, const GroebnerBasis& gb, const Ring& ring);

/// Krull dimension of P/I read off the initial ideal as the largest set of
/// variables containing no leading-monomial support; -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& gb, std::size_t nvars);
int ideal_dimension(const Ideal& ideal);

/// Minimal primes of a monomial ideal, each generated by variables: the
/// minimal transversals of the generator supports.  Throws UnsupportedInput
/// for non-monomial generators.
std::vector<Ideal> monomial_minimal_primes(const Ideal& ideal);

/// Minimal primes when the reduced basis is monomial, nullopt otherwise.
std::optional<std::vector<Ideal>> minimal_primes_if_monomial(const Ideal& ideal);

}  // namespace dgcm
