#pragma once

#include <map>
#include <set>

#include "dgcm/dg_model.hpp"
#include "dgcm/extended_int.hpp"

namespace dgcm {

/// Degrees i with H^i_m(C) != 0, each witnessed by Ext^{n-i}_P(C, P).
struct RGammaProfile {
  std::set<int> degrees;
  std::map<int, PresentedModule> witnesses;

  bool empty() const { return degrees.empty(); }
  ExtendedInt min() const { return empty() ? ExtendedInt::minus_infinity() : ExtendedInt(*degrees.begin()); }
  ExtendedInt max() const { return empty() ? ExtendedInt::minus_infinity() : ExtendedInt(*degrees.rbegin()); }
  /// max - min; 0 for the empty profile.
  int amplitude() const { return empty() ? 0 : *degrees.rbegin() - *degrees.begin(); }
};

struct InvariantBundle {
  int amp = 0;
  int sup = 0;
  int inf = 0;
  ExtendedInt depth;
  int seq_depth = 0;
  ExtendedInt lc_dim;
  ExtendedInt lc_dim_via_duality;
  RGammaProfile rgamma;
  /// Krull dimension of each nonzero cohomology.
  std::map<int, int> cohomology_dims;
  /// dim H^0(A) of the ambient DG-ring.
  int dim_h0 = 0;
};

/// Profile from Ext^j_P(C, P) by graded local duality over P with n variables.
RGammaProfile rgamma_profile(const std::map<int, PresentedModule>& ext, int n);
RGammaProfile rgamma_profile(const Complex& c);
RGammaProfile rgamma_profile(const DGRingModel& a);
RGammaProfile rgamma_profile(const DGModuleModel& m);

ExtendedInt depth(const Complex& c);
ExtendedInt depth(const DGRingModel& a);
ExtendedInt depth(const DGModuleModel& m);
/// Smallest i with Ext^i_P(k, M) != 0.
ExtendedInt depth_via_koszul(const PresentedModule& m);

/// max over nonzero H^l of dim H^l + l.
ExtendedInt lc_dim(const std::vector<CohomologyEntry>& table);
ExtendedInt lc_dim(const Complex& c);
ExtendedInt lc_dim(const DGRingModel& a);
ExtendedInt lc_dim(const DGModuleModel& m);
ExtendedInt lc_dim_via_duality(const Complex& c);
ExtendedInt lc_dim_via_duality(const DGRingModel& a);
ExtendedInt lc_dim_via_duality(const DGModuleModel& m);

/// lc.dim - depth.  Throws DegenerateInput on zero input.
int rgamma_amp(const DGRingModel& a);
int rgamma_amp(const DGModuleModel& m);
/// depth - inf.  Throws DegenerateInput on zero input.
int seq_depth(const DGRingModel& a);
int seq_depth(const DGModuleModel& m);

InvariantBundle compute_invariants(const DGRingModel& a);
InvariantBundle compute_invariants(const DGModuleModel& m);

/// Degrees i for which the image of H^i(x^{t0}; M) in H^i(x^{t_max}; M) is
/// nonzero, x = (x_1..x_n), t0 = ceil(t_max / 2).  H^i_m(M) is the colimit
/// of these Koszul cohomologies; a class that survives to t_max is nonzero
/// in the colimit unless it dies later, so the result is advisory.  Degrees
/// above dim M are never reported.
std::set<int> koszul_colimit_profile_oracle(const PresentedModule& m, int t_max);

}  // namespace dgcm
