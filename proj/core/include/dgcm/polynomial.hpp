#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgcm/ring.hpp"

namespace dgcm {

struct Term {
  Mono mono;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Element of a free module P^r (a plain polynomial when every term sits in
/// component 0).  Terms are kept sorted in decreasing monomial order with
/// nonzero coefficients.
class Poly {
 public:
  Poly() = default;

  static Poly constant(Coeff c);
  static Poly term(const Mono& m, Coeff c);
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(std::vector<Term> terms, const PrimeField& field);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }

  bool operator==(const Poly&) const = default;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Appends terms that are already in strictly decreasing order.
class PolyBuilder {
 public:
  void push(const Mono& m, Coeff c) {
    if (c != 0) terms_.push_back({m, c});
  }
  void reserve(std::size_t n) { terms_.reserve(n); }
  Poly build() && {
    Poly p;
    p.terms_ = std::move(terms_);
    return p;
  }

 private:
  std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b, const PrimeField& f);
Poly sub(const Poly& a, const Poly& b, const PrimeField& f);
Poly neg(const Poly& a, const PrimeField& f);
Poly scale(const Poly& a, Coeff c, const PrimeField& f);
/// a * (c * m) where m is a pure monomial.
Poly mul_term(const Poly& a, const Mono& m, Coeff c, const PrimeField& f);
/// a - (c * m) * b, the reduction step.
Poly sub_mul_term(const Poly& a, const Poly& b, const Mono& m, Coeff c, const PrimeField& f);
/// Product of a plain polynomial with a module element (or two plain ones).
Poly mul(const Poly& scalar, const Poly& v, const PrimeField& f);
Poly pow(const Poly& a, unsigned e, const PrimeField& f);
Poly make_monic(const Poly& a, const PrimeField& f);

/// Terms of component j moved to component 0.
Poly component(const Poly& v, int j);
/// Plain polynomial placed in component j of the given block.
Poly embed(const Poly& p, int j, std::uint8_t block = 0);
/// Renumbers components by `offset`.
Poly shift_components(const Poly& v, int offset);
Poly with_block(const Poly& v, std::uint8_t block);
/// Builds a module element from its component polynomials.
Poly from_components(std::span<const Poly> comps, const PrimeField& f);
std::vector<Poly> to_components(const Poly& v, std::size_t rank);

/// Total degree of the terms (monomial degree plus basis-vector degree).
/// nullopt for zero or inhomogeneous input.
std::optional<int> homogeneous_degree(const Poly& v, std::span<const int> comp_degrees);
inline std::optional<int> homogeneous_degree(const Poly& p) {
  static const int zero[1] = {0};
  return homogeneous_degree(p, std::span<const int>(zero, 1));
}
bool is_homogeneous(const Poly& v, std::span<const int> comp_degrees);
bool is_monomial(const Poly& p);

Poly variable(const Ring& ring, std::size_t i);

std::string to_string(const Poly& p, const Ring& ring);

}  // namespace dgcm
