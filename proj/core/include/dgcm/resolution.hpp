#pragma once

#include <map>

#include "dgcm/complex.hpp"

namespace dgcm {

/// A free complex together with a quasi-isomorphism onto the complex it
/// resolves.
struct ComplexResolution {
  FreeComplex free;
  /// comparison[i]: F^i -> C^i.
  std::map<int, Matrix> comparison;

  ChainMap comparison_map(const Complex& target) const;
};

/// Free replacement of a bounded complex, built from the top degree down: at
/// each step the new free term covers the pairs (c, p) with d p = 0 and
/// phi(p) = d c, which makes the comparison surjective on cohomology in the
/// current degree and injective in the degree above.  Minimal generators
/// keep the tail below the complex a minimal resolution, so the length is
/// bounded by the number of variables.
ComplexResolution resolve_complex(const Complex& c);

/// Minimal graded free resolution of M in degrees <= 0.
FreeComplex free_resolution(const PresentedModule& m);

/// Hom(F, P) with (dual d)^i = (-1)^{i+1} (d^{-i-1})^T, then shifted by `shift`.
Complex dual_into_base(const FreeComplex& f, int shift);

/// Nonzero Ext^j_P(C, P), keyed by j.  Zero-differential complexes are
/// handled term by term.
std::map<int, PresentedModule> ext_profile(const Complex& c);

/// Checks that the comparison map of a resolution is a quasi-isomorphism by
/// testing that its mapping cone is acyclic.
bool is_quasi_isomorphism(const ComplexResolution& res, const Complex& target);

}  // namespace dgcm
