#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgcm/resolution.hpp"

namespace dgcm {

enum class Construction { Koszul, TrivialExtension, NonNegTrivialExtension, DerivedFiber, Quotient, ExplicitComplex };

std::string to_string(Construction c);

struct CohomologyEntry {
  int degree;
  PresentedModule module;
  /// Krull dimension of the module (never -1: zero cohomology is omitted).
  int krull_dim;
};

/// Nonzero cohomology of a bounded complex, each entry pruned.
std::vector<CohomologyEntry> compute_cohomology(const Complex& c);

/// A DG-ring represented by its underlying complex over P (terms carry the
/// relations of R = P/I) and the ideal J with H^0 = P/J.  The multiplicative
/// structure is construction metadata only.
class DGRingModel {
 public:
  /// Explicit complex with a user-asserted H^0 ideal; checks J H^i = 0.
  static DGRingModel explicit_complex(const Ideal& base, Complex complex, Ideal h0_ideal,
                                      bool nonnegative = false);

  const Ring& ring() const { return *ring_ptr(); }
  const RingPtr& ring_ptr() const;
  const Ideal& base_ideal() const;
  Construction construction() const;
  /// Koszul and derived-fiber models: the elements killed so far.
  const std::vector<Poly>& elements() const;
  /// Trivial extensions: the module and the shift s of M[s].
  const std::optional<PresentedModule>& extension_module() const;
  int shift() const;
  const Complex& complex() const;
  const Ideal& h0_ideal() const;
  bool nonnegative() const;

  /// Memoized; concurrent callers observe one computation.
  const std::vector<CohomologyEntry>& cohomology_table() const;
  /// Memoized Ext^j_P(complex, P).
  const std::map<int, PresentedModule>& ext_modules() const;

  int sup() const;
  int inf() const;
  int amp() const { return sup() - inf(); }
  /// Krull dimension of H^0 = P/J.
  int dim_h0() const;
  /// H^i, the zero module when absent from the table.
  PresentedModule cohomology(int i) const;

  std::string describe() const;

 private:
  struct State;
  explicit DGRingModel(std::shared_ptr<State> s) : state_(std::move(s)) {}
  friend DGRingModel build_koszul_dg(const Ideal&, const std::vector<Poly>&);
  friend DGRingModel build_trivial_extension(const Ideal&, const PresentedModule&, int);
  friend DGRingModel build_nonneg_trivial_extension(const Ideal&, const PresentedModule&, int);
  friend DGRingModel build_derived_fiber(const Ideal&);
  friend DGRingModel dg_quotient(const DGRingModel&, const Poly&);

  std::shared_ptr<const State> state_;
};

/// Bounded DG-module over a model, given by its underlying complex.
class DGModuleModel {
 public:
  DGModuleModel(DGRingModel parent, Complex complex);
  /// A model regarded as a DG-module over itself.
  static DGModuleModel of(const DGRingModel& a) { return DGModuleModel(a, a.complex()); }

  const DGRingModel& parent() const { return parent_; }
  const Complex& complex() const { return complex_; }
  const std::vector<CohomologyEntry>& cohomology_table() const;
  const std::map<int, PresentedModule>& ext_modules() const;
  bool is_zero() const { return cohomology_table().empty(); }
  int sup() const;
  int inf() const;
  int amp() const { return sup() - inf(); }

 private:
  struct Cache;
  DGRingModel parent_;
  Complex complex_;
  std::shared_ptr<Cache> cache_;
};

/// Koszul complex of `elements` over R = P/I in degrees [-r, 0].
DGRingModel build_koszul_dg(const Ideal& base, const std::vector<Poly>& elements);
/// R ⋉ M[s] with s >= 1: R in degree 0, M in degree -s, zero differential.
DGRingModel build_trivial_extension(const Ideal& base, const PresentedModule& m, int s);
/// Non-negative R ⋉ M[s] with s <= -1: M sits in degree |s|.
DGRingModel build_nonneg_trivial_extension(const Ideal& base, const PresentedModule& m, int s);
/// k ⊗^L_P B modelled by Kos(B; x_1..x_n).
DGRingModel build_derived_fiber(const Ideal& base);
/// A//x: the cone of multiplication by x (Koszul models append x instead).
DGRingModel dg_quotient(const DGRingModel& a, const Poly& x);

/// Graded canonical module of R = P/I: Ext^{n-d}_P(R, P) twisted by the sum
/// of the variable weights, carrying the relations of I.
PresentedModule canonical_module(const Ideal& base);

}  // namespace dgcm
