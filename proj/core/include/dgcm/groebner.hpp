#pragma once

#include <cstdint>
#include <vector>

#include "dgcm/polynomial.hpp"

namespace dgcm {

/// Incremental Buchberger completion for submodules of a free module P^r.
///
/// Pairs are handled with the Gebauer-Moeller update (chain criterion) and,
/// for ideals, the coprime-leading-term criterion; the pair with the smallest
/// lcm is processed first (normal strategy).
class GroebnerEngine {
 public:
  explicit GroebnerEngine(const Ring& ring) : ring_(&ring) {}

  /// Reduces `g` against the current basis and inserts the remainder.
  /// Returns false when `g` already lies in the submodule spanned so far
  /// (only meaningful after complete()).
  bool add(const Poly& g);
  void complete();

  /// Full normal form against the current (complete) basis.
  Poly reduce(const Poly& f) const;
  /// Minimal, interreduced, monic basis sorted by increasing leading term.
  std::vector<Poly> reduced_basis() const;

 private:
  struct Entry {
    Poly poly;
    std::uint32_t mask;
    bool active;
  };
  struct Pair {
    int i;
    int j;
    Mono lcm;
  };

  int find_divisor(const Mono& m, std::uint32_t mask, int skip = -1) const;
  Poly reduce_excluding(Poly f, int skip) const;
  void update(int h);

  const Ring* ring_;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
  bool ideal_mode_ = true;
};

std::uint32_t divisibility_mask(const Mono& m);

/// Reduced Groebner basis of a submodule (an ideal when every generator lives
/// in component 0).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  static GroebnerBasis compute(const Ring& ring, const std::vector<Poly>& generators);

  const std::vector<Poly>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }

  Poly normal_form(const Poly& f, const Ring& ring) const;
  bool contains(const Poly& f, const Ring& ring) const { return normal_form(f, ring).is_zero(); }
  /// True when a constant lies in component `comp` (for ideals: the unit ideal).
  bool has_unit(int comp = 0) const;
  std::vector<Mono> leading_monomials() const;

  bool operator==(const GroebnerBasis&) const = default;

 private:
  std::vector<Poly> elements_;
  std::vector<std::uint32_t> masks_;
};

/// Normal form with respect to an arbitrary list of monic elements whose
/// leading terms generate the initial submodule.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const Ring& ring);

}  // namespace dgcm
