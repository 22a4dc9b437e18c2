#include "dgcm/invariants.hpp"

#include <algorithm>
#include <bit>

#include "dgcm/error.hpp"

namespace dgcm {

RGammaProfile rgamma_profile(const std::map<int, PresentedModule>& ext, int n) {
  RGammaProfile p;
  for (const auto& [j, e] : ext) {
    if (e.is_zero()) continue;
    p.degrees.insert(n - j);
    p.witnesses.emplace(n - j, e);
  }
  return p;
}

RGammaProfile rgamma_profile(const Complex& c) {
  return rgamma_profile(ext_profile(c), static_cast<int>(c.ring().nvars()));
}
RGammaProfile rgamma_profile(const DGRingModel& a) {
  return rgamma_profile(a.ext_modules(), static_cast<int>(a.ring().nvars()));
}
RGammaProfile rgamma_profile(const DGModuleModel& m) {
  return rgamma_profile(m.ext_modules(), static_cast<int>(m.complex().ring().nvars()));
}

ExtendedInt depth(const Complex& c) { return rgamma_profile(c).min(); }
ExtendedInt depth(const DGRingModel& a) { return rgamma_profile(a).min(); }
ExtendedInt depth(const DGModuleModel& m) { return rgamma_profile(m).min(); }

ExtendedInt depth_via_koszul(const PresentedModule& m) {
  if (m.is_zero()) return ExtendedInt::minus_infinity();
  FreeComplex k = free_resolution(PresentedModule::cyclic(Ideal::irrelevant(m.ring_ptr())));
  Complex h = hom_into(k, m);
  for (int j = h.lo(); j <= h.hi(); ++j) {
    if (!cohomology_at(h, j).is_zero()) return j;
  }
  throw Error("depth_via_koszul: Ext(k, M) vanishes for a nonzero module");
}

ExtendedInt lc_dim(const std::vector<CohomologyEntry>& table) {
  ExtendedInt best = ExtendedInt::minus_infinity();
  for (const auto& e : table) best = std::max(best, ExtendedInt(e.krull_dim + e.degree));
  return best;
}
ExtendedInt lc_dim(const Complex& c) { return lc_dim(compute_cohomology(c)); }
ExtendedInt lc_dim(const DGRingModel& a) { return lc_dim(a.cohomology_table()); }
ExtendedInt lc_dim(const DGModuleModel& m) { return lc_dim(m.cohomology_table()); }

ExtendedInt lc_dim_via_duality(const Complex& c) { return rgamma_profile(c).max(); }
ExtendedInt lc_dim_via_duality(const DGRingModel& a) { return rgamma_profile(a).max(); }
ExtendedInt lc_dim_via_duality(const DGModuleModel& m) { return rgamma_profile(m).max(); }

namespace {

template <class Model>
int rgamma_amp_impl(const Model& m) {
  RGammaProfile p = rgamma_profile(m);
  if (p.empty()) throw DegenerateInput("rgamma_amp of zero input");
  return p.amplitude();
}

template <class Model>
int seq_depth_impl(const Model& m) {
  ExtendedInt d = depth(m);
  if (!d.is_finite()) throw DegenerateInput("seq_depth of zero input");
  return d.value() - m.inf();
}

template <class Model>
InvariantBundle bundle_impl(const Model& m, int dim_h0) {
  const auto& table = m.cohomology_table();
  if (table.empty()) throw DegenerateInput("invariants of zero input");
  InvariantBundle b;
  b.sup = table.back().degree;
  b.inf = table.front().degree;
  b.amp = b.sup - b.inf;
  b.rgamma = rgamma_profile(m);
  b.depth = b.rgamma.min();
  b.seq_depth = b.depth.value() - b.inf;
  b.lc_dim = lc_dim(table);
  b.lc_dim_via_duality = b.rgamma.max();
  for (const auto& e : table) b.cohomology_dims[e.degree] = e.krull_dim;
  b.dim_h0 = dim_h0;
  return b;
}

}  // namespace

int rgamma_amp(const DGRingModel& a) { return rgamma_amp_impl(a); }
int rgamma_amp(const DGModuleModel& m) { return rgamma_amp_impl(m); }
int seq_depth(const DGRingModel& a) { return seq_depth_impl(a); }
int seq_depth(const DGModuleModel& m) { return seq_depth_impl(m); }

InvariantBundle compute_invariants(const DGRingModel& a) { return bundle_impl(a, a.dim_h0()); }
InvariantBundle compute_invariants(const DGModuleModel& m) {
  return bundle_impl(m, m.parent().dim_h0());
}

std::set<int> koszul_colimit_profile_oracle(const PresentedModule& m, int t_max) {
  if (t_max < 1) throw PreconditionError("koszul oracle: t_max must be >= 1");
  std::set<int> out;
  if (m.is_zero()) return out;
  // Classes are taken at level t0 and pushed to level t_max.
  const Ring& ring = m.ring();
  const auto& field = ring.field();
  const int n = static_cast<int>(ring.nvars());
  const std::size_t r = m.rank();

  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) by_size[std::popcount(mask)].push_back(mask);
  auto index_of = [&](int size, unsigned mask) {
    const auto& v = by_size[size];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
  };
  auto weight_of = [&](unsigned mask) {
    int w = 0;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) w += ring.weight(j);
    return w;
  };
  auto degrees = [&](int i, int t) {
    Degrees d;
    for (unsigned mask : by_size[i])
      for (std::size_t g = 0; g < r; ++g) d.push_back(m.degrees()[g] - t * weight_of(mask));
    return d;
  };
  auto relations = [&](int i) {
    std::vector<Poly> rels;
    for (std::size_t b = 0; b < by_size[i].size(); ++b)
      for (const auto& rel : m.relations()) rels.push_back(shift_components(rel, static_cast<int>(b * r)));
    return rels;
  };
  auto power = [&](unsigned mask, int e) {
    Mono mono{};
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) mono.exp[j] = static_cast<std::uint16_t>(e);
    mono.deg = ring.degree_of(mono.exp);
    return mono;
  };
  // d^i: K^i -> K^{i+1}, e_S (x) g -> sum_{j not in S} sign x_j^t e_{S+j} (x) g.
  auto differential = [&](int i, int t) {
    Matrix d;
    d.rows = by_size[i + 1].size() * r;
    for (unsigned mask : by_size[i]) {
      for (std::size_t g = 0; g < r; ++g) {
        std::vector<Term> terms;
        int below = 0;
        for (int j = 0; j < n; ++j) {
          if (mask >> j & 1u) {
            ++below;
            continue;
          }
          Mono mono = power(1u << j, t);
          mono.comp = static_cast<int>(index_of(i + 1, mask | (1u << j)) * r + g);
          terms.push_back({mono, below % 2 == 0 ? Coeff{1} : field.neg(1)});
        }
        d.columns.push_back(Poly::from_terms(std::move(terms), field));
      }
    }
    return d;
  };

  const int t0 = (t_max + 1) / 2;
  // Grothendieck vanishing: H^i_m(M) = 0 above dim M, so late-dying classes
  // there are not reported.
  const int top = module_krull_dim(m);
  for (int i = 0; i <= top; ++i) {
    std::vector<Poly> cycles;
    if (i < n) {
      cycles = kernel_modulo(ring, differential(i, t0), relations(i + 1), degrees(i, t0));
    } else {
      for (std::size_t c = 0; c < by_size[n].size() * r; ++c) {
        Mono unit;
        unit.comp = static_cast<std::int32_t>(c);
        cycles.push_back(Poly::term(unit, 1));
      }
    }
    if (cycles.empty()) continue;
    std::vector<Poly> boundaries = relations(i);
    if (i > 0) {
      Matrix prev = differential(i - 1, t_max);
      boundaries.insert(boundaries.end(), prev.columns.begin(), prev.columns.end());
    }
    GroebnerBasis gb = GroebnerBasis::compute(ring, boundaries);
    bool nonzero = false;
    for (const auto& z : cycles) {
      std::vector<Term> terms;
      for (const auto& term : z.terms()) {
        unsigned mask = by_size[i][static_cast<std::size_t>(term.mono.comp) / r];
        Mono mono = multiply(term.mono, power(mask, t_max - t0));
        mono.comp = term.mono.comp;
        terms.push_back({mono, term.coeff});
      }
      if (!gb.normal_form(Poly::from_terms(std::move(terms), field), ring).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) out.insert(i);
  }
  return out;
}

}  // namespace dgcm
