#pragma once

#include <map>
#include <vector>

#include "dgcm/module.hpp"

namespace dgcm {

/// Bounded cochain complex of presented modules; the differential raises the
/// cohomological degree by one.  Construction checks that every differential
/// is a well-defined map and that d o d = 0.
class Complex {
 public:
  /// terms[k] sits in degree lo + k; differentials[k] maps degree lo + k to
  /// lo + k + 1 (one fewer differential than terms).
  Complex(RingPtr ring, int lo, std::vector<PresentedModule> terms,
          std::vector<Matrix> differentials);
  static Complex zero(RingPtr ring);
  static Complex single(const PresentedModule& m, int degree);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool is_empty() const { return terms_.empty(); }

  /// The zero module outside [lo, hi].
  const PresentedModule& term(int i) const;
  /// Differential from degree i to i + 1 (a zero matrix outside the range).
  Matrix differential(int i) const;
  bool has_zero_differential() const;

 private:
  RingPtr ring_;
  int lo_;
  std::vector<PresentedModule> terms_;
  std::vector<Matrix> differentials_;
  PresentedModule zero_;
};

/// Degree-0 chain map given by its matrices per degree (absent = zero).
struct ChainMap {
  Complex source;
  Complex target;
  std::map<int, Matrix> components;

  Matrix at(int i) const;
};

/// Validates the chain-map identity f d = d f modulo the target relations.
void check_chain_map(const ChainMap& f);

/// C[k]: (C[k])^i = C^{i+k}; differentials are negated for odd k.
Complex shift(const Complex& c, int k);
/// Internal twist C(d) of every term.
Complex twist(const Complex& c, int d);
/// Mapping cone with cone^i = source^{i+1} + target^i and differential
/// (a, b) -> (-d a, f a + d b).
Complex cone(const ChainMap& f);
/// Multiplication by a homogeneous x as the chain map C(-deg x) -> C.
ChainMap multiplication_map(const Complex& c, const Poly& x);

PresentedModule cohomology_at(const Complex& c, int i);
bool is_acyclic(const Complex& c);

/// Bounded complex of graded free P-modules.
class FreeComplex {
 public:
  FreeComplex(RingPtr ring, int lo, std::vector<Degrees> degrees, std::vector<Matrix> differentials);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(degrees_.size()) - 1; }
  bool is_empty() const { return degrees_.empty(); }
  std::size_t rank(int i) const;
  const Degrees& degrees(int i) const;
  Matrix differential(int i) const;
  /// Ranks from lo to hi.
  std::vector<std::size_t> ranks() const;
  /// Length of the nonzero range.
  int length() const;

  Complex to_complex() const;

 private:
  RingPtr ring_;
  int lo_;
  std::vector<Degrees> degrees_;
  std::vector<Matrix> differentials_;
};

/// Hom(F, M) for a free complex F: degree j holds M^{rank F^{-j}} and the
/// differential is precomposition with d_F^{-j-1}, signed by (-1)^{j+1}.
Complex hom_into(const FreeComplex& f, const PresentedModule& m);

}  // namespace dgcm
