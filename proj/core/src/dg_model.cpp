#include "dgcm/dg_model.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

#include "dgcm/error.hpp"

namespace dgcm {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::Koszul: return "koszul";
    case Construction::TrivialExtension: return "trivial_extension";
    case Construction::NonNegTrivialExtension: return "nonneg_trivial_extension";
    case Construction::DerivedFiber: return "derived_fiber";
    case Construction::Quotient: return "quotient";
    case Construction::ExplicitComplex: return "complex";
  }
  return "unknown";
}

std::vector<CohomologyEntry> compute_cohomology(const Complex& c) {
  std::vector<CohomologyEntry> out;
  if (c.is_empty()) return out;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    if (c.term(i).rank() == 0) continue;
    PresentedModule h = cohomology_at(c, i);
    if (h.is_zero()) continue;
    int dim = module_krull_dim(h);
    out.push_back({i, std::move(h), dim});
  }
  return out;
}

namespace {

struct ModelData {
  RingPtr ring;
  Ideal base;
  Construction construction;
  std::vector<Poly> elements;
  std::optional<PresentedModule> module;
  int shift = 0;
  Complex complex;
  Ideal h0;
  bool nonnegative = false;
};

}  // namespace

struct DGRingModel::State : ModelData {
  explicit State(ModelData d) : ModelData(std::move(d)) {}

  mutable std::once_flag table_once;
  mutable std::vector<CohomologyEntry> table;
  mutable std::once_flag ext_once;
  mutable std::map<int, PresentedModule> ext;
  mutable std::once_flag dim_once;
  mutable int dim = -1;
};

namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!(a == b)) throw StructuralError(std::string(what) + ": ring mismatch");
}

int positive_degree(const Poly& x, const Ring& ring, const char* what) {
  auto d = homogeneous_degree(x);
  if (x.is_zero()) throw UnsupportedInput(std::string(what) + ": zero element");
  if (!d) throw UnsupportedInput(std::string(what) + ": inhomogeneous element " + to_string(x, ring));
  if (*d <= 0) {
    throw UnsupportedInput(std::string(what) + ": element " + to_string(x, ring) +
                           " is not in the irrelevant ideal");
  }
  return *d;
}

PresentedModule base_free(const Ideal& base, Degrees degrees) {
  return PresentedModule::over_quotient(base, std::move(degrees), {});
}

// Koszul complex of f over P/I: basis e_S for subsets S of size k sits in
// cohomological degree -k with internal degree sum of deg f_s.
Complex koszul_complex(const Ideal& base, const std::vector<Poly>& f) {
  const Ring& ring = base.ring();
  const auto& field = ring.field();
  const int r = static_cast<int>(f.size());
  std::vector<int> deg(r);
  for (int s = 0; s < r; ++s) deg[s] = positive_degree(f[s], ring, "koszul");

  std::vector<std::vector<unsigned>> by_size(r + 1);
  for (unsigned mask = 0; mask < (1u << r); ++mask) by_size[std::popcount(mask)].push_back(mask);
  auto mask_degree = [&](unsigned mask) {
    int d = 0;
    for (int s = 0; s < r; ++s)
      if (mask >> s & 1u) d += deg[s];
    return d;
  };

  std::vector<PresentedModule> terms;
  std::vector<Matrix> diffs;
  for (int k = r; k >= 0; --k) {
    Degrees d;
    for (unsigned mask : by_size[k]) d.push_back(mask_degree(mask));
    terms.push_back(base_free(base, std::move(d)));
  }
  for (int k = r; k >= 1; --k) {
    const auto& src = by_size[k];
    const auto& tgt = by_size[k - 1];
    std::vector<std::vector<Poly>> cols;
    for (unsigned mask : src) {
      std::vector<Poly> col(tgt.size());
      int pos = 0;
      for (int s = 0; s < r; ++s) {
        if (!(mask >> s & 1u)) continue;
        unsigned face = mask & ~(1u << s);
        auto it = std::lower_bound(tgt.begin(), tgt.end(), face);
        std::size_t row = static_cast<std::size_t>(it - tgt.begin());
        col[row] = (pos % 2 == 0) ? f[s] : neg(f[s], field);
        ++pos;
      }
      cols.push_back(std::move(col));
    }
    diffs.push_back(Matrix::from_entries(tgt.size(), cols, field));
  }
  return Complex(base.ring_ptr(), -r, std::move(terms), std::move(diffs));
}

Complex two_term(const Ideal& base, const PresentedModule& r, const PresentedModule& m, int m_degree) {
  // R in degree 0 and M in degree m_degree, zero differential.
  const RingPtr& ring = base.ring_ptr();
  int lo = std::min(0, m_degree);
  int hi = std::max(0, m_degree);
  std::vector<PresentedModule> terms;
  for (int i = lo; i <= hi; ++i) {
    if (i == 0) terms.push_back(r);
    else if (i == m_degree) terms.push_back(m);
    else terms.push_back(PresentedModule::zero(ring));
  }
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    diffs.push_back(Matrix::zero(terms[k + 1].rank(), terms[k].rank()));
  return Complex(ring, lo, std::move(terms), std::move(diffs));
}

PresentedModule as_base_module(const Ideal& base, const PresentedModule& m) {
  require_same_ring(base.ring(), m.ring(), "trivial extension");
  return PresentedModule::over_quotient(base, m.degrees(), m.relations());
}

}  // namespace

const RingPtr& DGRingModel::ring_ptr() const { return state_->ring; }
const Ideal& DGRingModel::base_ideal() const { return state_->base; }
Construction DGRingModel::construction() const { return state_->construction; }
const std::vector<Poly>& DGRingModel::elements() const { return state_->elements; }
const std::optional<PresentedModule>& DGRingModel::extension_module() const { return state_->module; }
int DGRingModel::shift() const { return state_->shift; }
const Complex& DGRingModel::complex() const { return state_->complex; }
const Ideal& DGRingModel::h0_ideal() const { return state_->h0; }
bool DGRingModel::nonnegative() const { return state_->nonnegative; }

const std::vector<CohomologyEntry>& DGRingModel::cohomology_table() const {
  std::call_once(state_->table_once, [&] { state_->table = compute_cohomology(state_->complex); });
  return state_->table;
}

const std::map<int, PresentedModule>& DGRingModel::ext_modules() const {
  std::call_once(state_->ext_once, [&] { state_->ext = ext_profile(state_->complex); });
  return state_->ext;
}

int DGRingModel::sup() const {
  const auto& t = cohomology_table();
  if (t.empty()) throw DegenerateInput("model has zero cohomology");
  return t.back().degree;
}

int DGRingModel::inf() const {
  const auto& t = cohomology_table();
  if (t.empty()) throw DegenerateInput("model has zero cohomology");
  return t.front().degree;
}

int DGRingModel::dim_h0() const {
  std::call_once(state_->dim_once, [&] { state_->dim = ideal_dimension(state_->h0); });
  return state_->dim;
}

PresentedModule DGRingModel::cohomology(int i) const {
  for (const auto& e : cohomology_table())
    if (e.degree == i) return e.module;
  return PresentedModule::zero(state_->ring);
}

std::string DGRingModel::describe() const {
  std::ostringstream os;
  os << to_string(state_->construction) << " over P/" << state_->base.to_string();
  if (!state_->elements.empty()) {
    os << " on (";
    for (std::size_t i = 0; i < state_->elements.size(); ++i)
      os << (i ? ", " : "") << dgcm::to_string(state_->elements[i], *state_->ring);
    os << ")";
  }
  if (state_->module) os << " with module " << state_->module->to_string() << " shift " << state_->shift;
  return os.str();
}

DGRingModel build_koszul_dg(const Ideal& base, const std::vector<Poly>& elements) {
  auto s = std::make_shared<DGRingModel::State>(ModelData{
      base.ring_ptr(), base, Construction::Koszul, elements, std::nullopt, 0,
      koszul_complex(base, elements), Ideal(base.ring_ptr(), {}), false});
  std::vector<Poly> gens = base.generators();
  gens.insert(gens.end(), elements.begin(), elements.end());
  s->h0 = Ideal(base.ring_ptr(), std::move(gens));
  return DGRingModel(std::move(s));
}

DGRingModel build_trivial_extension(const Ideal& base, const PresentedModule& m, int shift) {
  if (shift < 1) {
    if (shift == 0) throw DegenerateInput("trivial extension: shift 0 collapses the amplitude");
    throw PreconditionError("trivial extension: shift must be >= 1; use the non-negative construction");
  }
  PresentedModule mod = as_base_module(base, m);
  if (mod.is_zero()) throw DegenerateInput("trivial extension: the module is zero");
  PresentedModule r = base_free(base, {0});
  auto s = std::make_shared<DGRingModel::State>(ModelData{
      base.ring_ptr(), base, Construction::TrivialExtension, {}, mod, shift,
      two_term(base, r, mod, -shift), base, false});
  return DGRingModel(std::move(s));
}

DGRingModel build_nonneg_trivial_extension(const Ideal& base, const PresentedModule& m, int shift) {
  if (shift > -1) {
    if (shift == 0) throw DegenerateInput("trivial extension: shift 0 collapses the amplitude");
    throw PreconditionError("non-negative trivial extension: shift must be <= -1");
  }
  PresentedModule mod = as_base_module(base, m);
  if (mod.is_zero()) throw DegenerateInput("trivial extension: the module is zero");
  PresentedModule r = base_free(base, {0});
  auto s = std::make_shared<DGRingModel::State>(ModelData{
      base.ring_ptr(), base, Construction::NonNegTrivialExtension, {}, mod, shift,
      two_term(base, r, mod, -shift), base, true});
  return DGRingModel(std::move(s));
}

DGRingModel build_derived_fiber(const Ideal& base) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < base.ring().nvars(); ++i) vars.push_back(variable(base.ring(), i));
  DGRingModel k = build_koszul_dg(base, vars);
  auto s = std::const_pointer_cast<DGRingModel::State>(k.state_);
  s->construction = Construction::DerivedFiber;
  return k;
}

DGRingModel dg_quotient(const DGRingModel& a, const Poly& x) {
  positive_degree(x, a.ring(), "dg_quotient");
  if (a.nonnegative()) throw PreconditionError("dg_quotient: non-negative models are not supported");
  if (a.construction() == Construction::Koszul || a.construction() == Construction::DerivedFiber) {
    std::vector<Poly> els = a.elements();
    els.push_back(x);
    return build_koszul_dg(a.base_ideal(), els);
  }
  Complex c = cone(multiplication_map(a.complex(), x));
  auto s = std::make_shared<DGRingModel::State>(ModelData{
      a.ring_ptr(), a.base_ideal(), Construction::Quotient, a.elements(), a.extension_module(),
      a.shift(), std::move(c), a.h0_ideal().with(x), false});
  s->elements.push_back(x);
  return DGRingModel(std::move(s));
}

DGRingModel DGRingModel::explicit_complex(const Ideal& base, Complex complex, Ideal h0_ideal,
                                          bool nonnegative) {
  require_same_ring(base.ring(), complex.ring(), "explicit complex");
  require_same_ring(base.ring(), h0_ideal.ring(), "explicit complex");
  if (h0_ideal.is_unit()) throw DegenerateInput("explicit complex: H^0 ideal is the unit ideal");
  if (!h0_ideal.contains(base)) throw PreconditionError("explicit complex: H^0 ideal must contain the base ideal");
  auto s = std::make_shared<State>(ModelData{base.ring_ptr(), base, Construction::ExplicitComplex, {},
                                         std::nullopt, 0, std::move(complex), std::move(h0_ideal),
                                         nonnegative});
  DGRingModel model(std::move(s));
  const auto& table = model.cohomology_table();
  for (const auto& e : table) {
    if (!annihilator(e.module).contains(model.h0_ideal())) {
      throw PreconditionError("explicit complex: the H^0 ideal does not annihilate H^" +
                              std::to_string(e.degree));
    }
    if (nonnegative ? e.degree < 0 : e.degree > 0) {
      throw PreconditionError("explicit complex: cohomology in degree " + std::to_string(e.degree) +
                              " contradicts the orientation");
    }
  }
  if (!model.cohomology(0).is_zero()) {
    Ideal ann0 = annihilator(model.cohomology(0));
    if (!(ann0 == model.h0_ideal()))
      throw PreconditionError("explicit complex: H^0 is not annihilated exactly by the asserted ideal");
  } else {
    throw PreconditionError("explicit complex: H^0 vanishes");
  }
  return model;
}

struct DGModuleModel::Cache {
  std::once_flag table_once;
  std::vector<CohomologyEntry> table;
  std::once_flag ext_once;
  std::map<int, PresentedModule> ext;
};

DGModuleModel::DGModuleModel(DGRingModel parent, Complex complex)
    : parent_(std::move(parent)), complex_(std::move(complex)), cache_(std::make_shared<Cache>()) {
  require_same_ring(parent_.ring(), complex_.ring(), "DG-module");
}

const std::vector<CohomologyEntry>& DGModuleModel::cohomology_table() const {
  std::call_once(cache_->table_once, [&] { cache_->table = compute_cohomology(complex_); });
  return cache_->table;
}

const std::map<int, PresentedModule>& DGModuleModel::ext_modules() const {
  std::call_once(cache_->ext_once, [&] { cache_->ext = ext_profile(complex_); });
  return cache_->ext;
}

int DGModuleModel::sup() const {
  const auto& t = cohomology_table();
  if (t.empty()) throw DegenerateInput("DG-module has zero cohomology");
  return t.back().degree;
}

int DGModuleModel::inf() const {
  const auto& t = cohomology_table();
  if (t.empty()) throw DegenerateInput("DG-module has zero cohomology");
  return t.front().degree;
}

PresentedModule canonical_module(const Ideal& base) {
  int d = ideal_dimension(base);
  if (d < 0) throw DegenerateInput("canonical module of the zero ring");
  const Ring& ring = base.ring();
  int n = static_cast<int>(ring.nvars());
  auto ext = ext_profile(Complex::single(PresentedModule::cyclic(base), 0));
  auto it = ext.find(n - d);
  if (it == ext.end()) throw Error("canonical module: Ext^{n-d} vanishes");
  int weight_sum = 0;
  for (int w : ring.weights()) weight_sum += w;
  PresentedModule w = twist(it->second, -weight_sum);
  return prune(PresentedModule::over_quotient(base, w.degrees(), w.relations()));
}

}  // namespace dgcm
