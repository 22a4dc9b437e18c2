#include "dgcm/resolution.hpp"

#include <algorithm>

#include "dgcm/error.hpp"

namespace dgcm {

ChainMap ComplexResolution::comparison_map(const Complex& target) const {
  return ChainMap{free.to_complex(), target, comparison};
}

ComplexResolution resolve_complex(const Complex& c) {
  const RingPtr& ring = c.ring_ptr();
  const auto& field = c.ring().field();
  if (c.is_empty()) return {FreeComplex(ring, 0, {}, {}), {}};

  const int n = static_cast<int>(c.ring().nvars());
  const int floor = c.lo() - n - 2;

  // Built from the top: index 0 is degree hi.
  std::vector<Degrees> degs;       // F^i basis degrees
  std::vector<Matrix> dfree;       // F^i -> F^{i+1}
  std::vector<Matrix> phi;         // F^i -> C^i

  Degrees above_degs;              // F^{i+1}
  Matrix above_d = Matrix::zero(0, 0);    // F^{i+1} -> F^{i+2}
  Matrix above_phi = Matrix::zero(0, 0);  // F^{i+1} -> C^{i+1}
  std::size_t above2_rank = 0;     // rank F^{i+2}

  int i = c.hi();
  for (;; --i) {
    if (i < floor) throw Error("free replacement did not terminate; input is not graded");
    const PresentedModule& ci = c.term(i);
    const PresentedModule& cnext = c.term(i + 1);
    const std::size_t rc = ci.rank();
    const std::size_t rf = above_degs.size();
    if (i < c.lo() && rf == 0) break;

    // Ambient C^i (+) F^{i+1}; target F^{i+2} (+) C^{i+1}.
    Degrees ambient = ci.degrees();
    ambient.insert(ambient.end(), above_degs.begin(), above_degs.end());
    Matrix a;
    a.rows = above2_rank + cnext.rank();
    Matrix dc = c.differential(i);
    for (std::size_t j = 0; j < rc; ++j) {
      a.columns.push_back(shift_components(neg(dc.columns[j], field), static_cast<int>(above2_rank)));
    }
    for (std::size_t j = 0; j < rf; ++j) {
      a.columns.push_back(
          add(above_d.columns[j],
              shift_components(above_phi.columns[j], static_cast<int>(above2_rank)), field));
    }
    std::vector<Poly> target_rel;
    for (const auto& r : cnext.relations()) {
      target_rel.push_back(shift_components(r, static_cast<int>(above2_rank)));
    }
    std::vector<Poly> pairs;
    if (a.rows == 0) {
      pairs = Matrix::identity(ambient.size()).columns;
    } else {
      pairs = kernel_modulo(c.ring(), a, target_rel, ambient);
    }
    auto gens = minimal_generators(c.ring(), pairs, ci.relations(), ambient);

    Degrees fdeg;
    Matrix d_new;
    d_new.rows = rf;
    Matrix phi_new;
    phi_new.rows = rc;
    for (const auto& g : gens) {
      fdeg.push_back(*vector_degree(g, ambient));
      std::vector<Term> cpart, ppart;
      for (const auto& t : g.terms()) {
        if (static_cast<std::size_t>(t.mono.comp) < rc) {
          cpart.push_back(t);
        } else {
          Term u = t;
          u.mono.comp -= static_cast<std::int32_t>(rc);
          ppart.push_back(u);
        }
      }
      phi_new.columns.push_back(Poly::from_terms(std::move(cpart), field));
      d_new.columns.push_back(Poly::from_terms(std::move(ppart), field));
    }
    degs.push_back(fdeg);
    dfree.push_back(d_new);
    phi.push_back(phi_new);

    above2_rank = rf;
    above_degs = fdeg;
    above_d = d_new;
    above_phi = phi_new;
  }
  // Degrees hi down to i+1 were produced; trim zero terms at both ends.
  const int top = c.hi();
  int count = static_cast<int>(degs.size());
  int first = 0;
  while (first < count && degs[first].empty()) ++first;
  int last = count - 1;
  while (last >= first && degs[last].empty()) --last;
  if (first > last) return {FreeComplex(ring, 0, {}, {}), {}};

  const int new_lo = top - last;
  std::vector<Degrees> fd;
  std::vector<Matrix> fdiff;
  ComplexResolution res{FreeComplex(ring, 0, {}, {}), {}};
  for (int k = last; k >= first; --k) fd.push_back(degs[k]);
  // dfree[k] leaves degree top - k.
  for (int k = last; k > first; --k) fdiff.push_back(dfree[k]);
  res.free = FreeComplex(ring, new_lo, std::move(fd), std::move(fdiff));
  for (int k = first; k <= last; ++k) {
    if (top - k >= c.lo() && top - k <= c.hi()) res.comparison[top - k] = phi[k];
  }
  return res;
}

FreeComplex free_resolution(const PresentedModule& m) {
  return resolve_complex(Complex::single(m, 0)).free;
}

Complex dual_into_base(const FreeComplex& f, int shift) {
  if (f.is_empty()) return Complex::zero(f.ring_ptr());
  const auto& field = f.ring().field();
  std::vector<PresentedModule> terms;
  std::vector<Matrix> diffs;
  const int lo = -f.hi();
  const int hi = -f.lo();
  for (int j = lo; j <= hi; ++j) {
    Degrees d;
    for (int x : f.degrees(-j)) d.push_back(-x);
    terms.push_back(PresentedModule::free(f.ring_ptr(), std::move(d)));
    if (j == hi) break;
    Matrix t = transpose(f.differential(-j - 1), field);
    if ((j + 1) % 2 != 0) t = scale(t, field.neg(1), field);
    diffs.push_back(std::move(t));
  }
  Complex dual(f.ring_ptr(), lo, std::move(terms), std::move(diffs));
  return dgcm::shift(dual, shift);
}

namespace {

std::map<int, PresentedModule> ext_of_free(const FreeComplex& f) {
  std::map<int, PresentedModule> out;
  if (f.is_empty()) return out;
  Complex dual = dual_into_base(f, 0);
  for (int j = dual.lo(); j <= dual.hi(); ++j) {
    auto h = cohomology_at(dual, j);
    if (!h.is_zero()) out.emplace(j, std::move(h));
  }
  return out;
}

}  // namespace

std::map<int, PresentedModule> ext_profile(const Complex& c) {
  if (c.is_empty()) return {};
  if (!c.has_zero_differential()) return ext_of_free(resolve_complex(c).free);
  // Ext^j(M placed in degree t) = Ext^{j+t}(M).
  std::map<int, PresentedModule> out;
  for (int t = c.lo(); t <= c.hi(); ++t) {
    const auto& m = c.term(t);
    if (m.rank() == 0) continue;
    for (auto& [q, e] : ext_of_free(free_resolution(m))) {
      const int j = q - t;
      auto it = out.find(j);
      if (it == out.end()) {
        out.emplace(j, e);
      } else {
        it->second = direct_sum(it->second, e);
      }
    }
  }
  return out;
}

bool is_quasi_isomorphism(const ComplexResolution& res, const Complex& target) {
  ChainMap f = res.comparison_map(target);
  check_chain_map(f);
  return is_acyclic(cone(f));
}

}  // namespace dgcm
