#include "dgcm/module.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dgcm/error.hpp"

namespace dgcm {

// ---------------------------------------------------------------- matrices

bool Matrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const Poly& c) { return c.is_zero(); });
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  Matrix m;
  m.rows = rows;
  m.columns.assign(cols, Poly{});
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m;
  m.rows = n;
  for (std::size_t j = 0; j < n; ++j) {
    Mono e;
    e.comp = static_cast<std::int32_t>(j);
    m.columns.push_back(Poly::term(e, 1));
  }
  return m;
}

Matrix Matrix::from_entries(std::size_t rows, const std::vector<std::vector<Poly>>& cols,
                            const PrimeField& f) {
  Matrix m;
  m.rows = rows;
  for (const auto& c : cols) {
    if (c.size() != rows) throw StructuralError("matrix column has the wrong length");
    m.columns.push_back(from_components(c, f));
  }
  return m;
}

Poly apply(const Matrix& a, const Poly& v, const PrimeField& f) {
  std::vector<Term> acc;
  for (const auto& t : v.terms()) {
    if (t.mono.comp < 0 || static_cast<std::size_t>(t.mono.comp) >= a.cols()) {
      throw StructuralError("vector does not match the matrix source");
    }
    Mono m = t.mono;
    m.comp = 0;
    m.block = 0;
    for (const auto& s : a.columns[t.mono.comp].terms()) {
      acc.push_back({multiply(s.mono, m), f.mul(s.coeff, t.coeff)});
    }
  }
  return Poly::from_terms(std::move(acc), f);
}

Matrix compose(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (b.rows != a.cols()) throw StructuralError("matrix shapes do not compose");
  Matrix m;
  m.rows = a.rows;
  for (const auto& c : b.columns) m.columns.push_back(apply(a, c, f));
  return m;
}

Matrix transpose(const Matrix& a, const PrimeField& f) {
  std::vector<std::vector<Term>> cols(a.rows);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (const auto& t : a.columns[j].terms()) {
      Mono m = t.mono;
      int i = m.comp;
      m.comp = static_cast<std::int32_t>(j);
      cols[i].push_back({m, t.coeff});
    }
  }
  Matrix out;
  out.rows = a.cols();
  for (auto& c : cols) out.columns.push_back(Poly::from_terms(std::move(c), f));
  return out;
}

Matrix scale(const Matrix& a, Coeff c, const PrimeField& f) {
  Matrix m;
  m.rows = a.rows;
  for (const auto& col : a.columns) m.columns.push_back(dgcm::scale(col, c, f));
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m;
  m.rows = a.rows + b.rows;
  m.columns = a.columns;
  for (const auto& c : b.columns) {
    m.columns.push_back(shift_components(c, static_cast<int>(a.rows)));
  }
  return m;
}

Matrix multiply_entries(const Matrix& a, const Poly& x, const PrimeField& f) {
  Matrix m;
  m.rows = a.rows;
  for (const auto& c : a.columns) m.columns.push_back(mul(x, c, f));
  return m;
}

std::optional<int> vector_degree(const Poly& v, const Degrees& degrees) {
  if (v.is_zero()) return std::nullopt;
  auto d = homogeneous_degree(v, degrees);
  if (!d) throw UnsupportedInput("inhomogeneous module element");
  return d;
}

// ------------------------------------------------------- kernels, generators

std::vector<Poly> minimal_generators(const Ring& ring, const std::vector<Poly>& s,
                                     const std::vector<Poly>& u, const Degrees& degrees) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto d = vector_degree(s[k], degrees);
    if (d) order.push_back({*d, k});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  GroebnerEngine engine(ring);
  for (const auto& g : u) {
    if (!g.is_zero()) engine.add(g);
  }
  engine.complete();
  std::vector<Poly> kept;
  for (const auto& [deg, k] : order) {
    (void)deg;
    if (engine.reduce(s[k]).is_zero()) continue;
    kept.push_back(s[k]);
    engine.add(s[k]);
    engine.complete();
  }
  return kept;
}

std::vector<Poly> kernel_modulo(const Ring& ring, const Matrix& a, const std::vector<Poly>& u,
                                const Degrees& source) {
  if (source.size() != a.cols()) throw StructuralError("source degrees do not match the matrix");
  const int rows = static_cast<int>(a.rows);
  const auto& field = ring.field();
  GroebnerEngine engine(ring);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Mono tag;
    tag.comp = rows + static_cast<std::int32_t>(j);
    tag.block = 1;
    engine.add(add(a.columns[j], Poly::term(tag, 1), field));
  }
  for (const auto& g : u) {
    if (!g.is_zero()) engine.add(g);
  }
  engine.complete();
  std::vector<Poly> kernel;
  for (const auto& g : engine.reduced_basis()) {
    if (g.lead().mono.block != 1) continue;
    kernel.push_back(with_block(shift_components(g, -rows), 0));
  }
  return minimal_generators(ring, kernel, {}, source);
}

// ------------------------------------------------------- presented modules

struct PresentedModule::Cache {
  std::once_flag once;
  GroebnerBasis gb;
};

PresentedModule::PresentedModule(RingPtr ring, Degrees degrees, std::vector<Poly> relations)
    : ring_(std::move(ring)), degrees_(std::move(degrees)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw StructuralError("module without a ring");
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& t : r.terms()) {
      if (t.mono.comp < 0 || static_cast<std::size_t>(t.mono.comp) >= degrees_.size() ||
          t.mono.block != 0) {
        throw StructuralError("relation has a component outside the module");
      }
    }
    if (!homogeneous_degree(r, degrees_)) {
      throw UnsupportedInput("inhomogeneous relation " + dgcm::to_string(r, *ring_));
    }
    relations_.push_back(std::move(r));
  }
}

PresentedModule PresentedModule::over_quotient(const Ideal& quotient, Degrees degrees,
                                               std::vector<Poly> relations) {
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    for (const auto& g : quotient.generators()) {
      relations.push_back(embed(g, static_cast<int>(j)));
    }
  }
  return PresentedModule(quotient.ring_ptr(), std::move(degrees), std::move(relations));
}

PresentedModule PresentedModule::free(RingPtr ring, Degrees degrees) {
  return PresentedModule(std::move(ring), std::move(degrees), {});
}

PresentedModule PresentedModule::zero(RingPtr ring) { return PresentedModule(std::move(ring), {}, {}); }

PresentedModule PresentedModule::cyclic(const Ideal& j, int degree) {
  return over_quotient(j, {degree}, {});
}

PresentedModule PresentedModule::ideal_module(const Ideal& quotient,
                                              const std::vector<Poly>& gens) {
  const Ring& ring = quotient.ring();
  Matrix a;
  a.rows = 1;
  Degrees degs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = homogeneous_degree(g);
    if (!d) throw UnsupportedInput("inhomogeneous ideal generator " + dgcm::to_string(g, ring));
    a.columns.push_back(g);
    degs.push_back(*d);
  }
  auto rels = kernel_modulo(ring, a, quotient.generators(), degs);
  return prune(PresentedModule(quotient.ring_ptr(), std::move(degs), std::move(rels)));
}

const GroebnerBasis& PresentedModule::relation_basis() const {
  std::call_once(cache_->once,
                 [this] { cache_->gb = GroebnerBasis::compute(*ring_, relations_); });
  return cache_->gb;
}

bool PresentedModule::is_zero() const {
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    if (!relation_basis().has_unit(static_cast<int>(j))) return false;
  }
  return true;
}

std::string PresentedModule::to_string() const {
  std::ostringstream os;
  os << "generators in degrees [";
  for (std::size_t j = 0; j < degrees_.size(); ++j) os << (j ? ", " : "") << degrees_[j];
  os << "], relations [";
  for (std::size_t k = 0; k < relations_.size(); ++k) {
    os << (k ? ", " : "") << "(";
    auto comps = to_components(relations_[k], degrees_.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      os << (j ? ", " : "") << dgcm::to_string(comps[j], *ring_);
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

PresentedModule prune(const PresentedModule& m) {
  const auto& field = m.ring().field();
  Degrees degrees = m.degrees();
  std::vector<Poly> rels = m.relations();
  for (;;) {
    int pick_rel = -1, pick_comp = -1;
    Coeff c = 0;
    for (std::size_t k = 0; k < rels.size() && pick_rel < 0; ++k) {
      for (const auto& t : rels[k].terms()) {
        if (!is_constant(t.mono)) continue;
        Poly entry = component(rels[k], t.mono.comp);
        if (entry.size() == 1 && is_constant(entry.lead().mono)) {
          pick_rel = static_cast<int>(k);
          pick_comp = t.mono.comp;
          c = entry.lead().coeff;
          break;
        }
      }
    }
    if (pick_rel < 0) break;
    const Poly r = rels[pick_rel];
    const Coeff cinv = field.inv(c);
    std::vector<Poly> next;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (static_cast<int>(k) == pick_rel) continue;
      Poly f = component(rels[k], pick_comp);
      Poly v = rels[k];
      if (!f.is_zero()) v = sub(v, mul(dgcm::scale(f, cinv, field), r, field), field);
      if (v.is_zero()) continue;
      std::vector<Term> terms;
      for (const auto& t : v.terms()) {
        Mono mm = t.mono;
        if (mm.comp > pick_comp) --mm.comp;
        terms.push_back({mm, t.coeff});
      }
      next.push_back(Poly::from_terms(std::move(terms), field));
    }
    degrees.erase(degrees.begin() + pick_comp);
    rels = std::move(next);
  }
  return PresentedModule(m.ring_ptr(), std::move(degrees), std::move(rels));
}

PresentedModule subquotient(const RingPtr& ring, const std::vector<Poly>& gens,
                            const std::vector<Poly>& u, const Degrees& degrees) {
  auto z = minimal_generators(*ring, gens, u, degrees);
  if (z.empty()) return PresentedModule::zero(ring);
  Matrix a;
  a.rows = degrees.size();
  a.columns = z;
  Degrees zdeg;
  for (const auto& g : z) zdeg.push_back(*vector_degree(g, degrees));
  auto rels = kernel_modulo(*ring, a, u, zdeg);
  return prune(PresentedModule(ring, std::move(zdeg), std::move(rels)));
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("modules over different rings");
  Degrees d = a.degrees();
  d.insert(d.end(), b.degrees().begin(), b.degrees().end());
  std::vector<Poly> rels = a.relations();
  for (const auto& r : b.relations()) {
    rels.push_back(shift_components(r, static_cast<int>(a.rank())));
  }
  return PresentedModule(a.ring_ptr(), std::move(d), std::move(rels));
}

PresentedModule twist(const PresentedModule& m, int d) {
  Degrees deg = m.degrees();
  for (auto& x : deg) x -= d;
  return PresentedModule(m.ring_ptr(), std::move(deg), m.relations());
}

namespace {

// Relations of r copies of M placed side by side.
std::vector<Poly> repeated_relations(const PresentedModule& m, std::size_t copies) {
  std::vector<Poly> out;
  for (std::size_t k = 0; k < copies; ++k) {
    for (const auto& r : m.relations()) {
      out.push_back(shift_components(r, static_cast<int>(k * m.rank())));
    }
  }
  return out;
}

}  // namespace

Ideal annihilator(const PresentedModule& m) {
  const std::size_t r = m.rank();
  if (r == 0) return Ideal::unit(m.ring_ptr());
  // f kills M iff f * (e_1, ..., e_r) lies in N^r inside (P^r)^r.
  Matrix a;
  a.rows = r * r;
  std::vector<Term> diag;
  for (std::size_t k = 0; k < r; ++k) {
    Mono e;
    e.comp = static_cast<std::int32_t>(k * r + k);
    diag.push_back({e, 1});
  }
  a.columns.push_back(Poly::from_terms(std::move(diag), m.ring().field()));
  auto gens = kernel_modulo(m.ring(), a, repeated_relations(m, r), Degrees{0});
  return Ideal(m.ring_ptr(), std::move(gens));
}

int module_krull_dim(const PresentedModule& m) {
  if (m.is_zero()) return -1;
  return ideal_dimension(annihilator(m));
}

namespace {

void enumerate_exponents(const Ring& ring, std::size_t var, int remaining, Mono& current,
                         const std::function<void(const Mono&)>& visit) {
  if (var == ring.nvars()) {
    if (remaining == 0) visit(current);
    return;
  }
  const int w = ring.weight(var);
  for (int e = 0; e * w <= remaining; ++e) {
    current.exp[var] = static_cast<std::uint16_t>(e);
    current.deg += e * w;
    enumerate_exponents(ring, var + 1, remaining - e * w, current, visit);
    current.deg -= e * w;
  }
  current.exp[var] = 0;
}

}  // namespace

long long hilbert_function(const PresentedModule& m, int degree) {
  const auto leads = m.relation_basis().leading_monomials();
  long long count = 0;
  for (std::size_t j = 0; j < m.rank(); ++j) {
    int rem = degree - m.degrees()[j];
    if (rem < 0) continue;
    Mono cur;
    cur.comp = static_cast<std::int32_t>(j);
    enumerate_exponents(m.ring(), 0, rem, cur, [&](const Mono& mono) {
      bool standard = std::none_of(leads.begin(), leads.end(),
                                   [&](const Mono& l) { return divides(l, mono); });
      if (standard) ++count;
    });
  }
  return count;
}

PresentedModule multiplication_kernel(const PresentedModule& m, const Poly& x) {
  auto d = homogeneous_degree(x);
  if (!d) throw UnsupportedInput("multiplier must be homogeneous");
  Matrix a = multiply_entries(Matrix::identity(m.rank()), x, m.ring().field());
  Degrees src = m.degrees();
  auto pre = kernel_modulo(m.ring(), a, m.relations(), src);
  return subquotient(m.ring_ptr(), pre, m.relations(), src);
}

bool multiplication_injective(const PresentedModule& m, const Poly& x) {
  if (!homogeneous_degree(x)) throw UnsupportedInput("multiplier must be homogeneous");
  Matrix a = multiply_entries(Matrix::identity(m.rank()), x, m.ring().field());
  auto pre = kernel_modulo(m.ring(), a, m.relations(), m.degrees());
  const auto& gb = m.relation_basis();
  return std::all_of(pre.begin(), pre.end(),
                     [&](const Poly& v) { return gb.contains(v, m.ring()); });
}

PresentedModule quotient_by_element(const PresentedModule& m, const Poly& x) {
  std::vector<Poly> rels = m.relations();
  for (std::size_t j = 0; j < m.rank(); ++j) rels.push_back(embed(x, static_cast<int>(j)));
  return prune(PresentedModule(m.ring_ptr(), m.degrees(), std::move(rels)));
}

bool has_nonzero_socle(const PresentedModule& m) {
  if (m.rank() == 0) return false;
  const Ring& ring = m.ring();
  const std::size_t n = ring.nvars();
  const std::size_t r = m.rank();
  if (n == 0) return !m.is_zero();
  // v -> (x_1 v, ..., x_n v) into n copies of P^r.
  Matrix a;
  a.rows = n * r;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Term> col;
    for (std::size_t i = 0; i < n; ++i) {
      Mono mono = ring.variable(i);
      mono.comp = static_cast<std::int32_t>(i * r + j);
      col.push_back({mono, 1});
    }
    a.columns.push_back(Poly::from_terms(std::move(col), ring.field()));
  }
  auto pre = kernel_modulo(ring, a, repeated_relations(m, n), m.degrees());
  const auto& gb = m.relation_basis();
  return std::any_of(pre.begin(), pre.end(), [&](const Poly& v) { return !gb.contains(v, ring); });
}

// ------------------------------------------------------------- module maps

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.ring() == target_.ring())) throw StructuralError("map between different rings");
  if (matrix_.cols() != source_.rank() || matrix_.rows != target_.rank()) {
    throw StructuralError("map matrix does not match source and target ranks");
  }
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    auto d = homogeneous_degree(matrix_.columns[j], target_.degrees());
    if (!matrix_.columns[j].is_zero() && (!d || *d != source_.degrees()[j])) {
      throw UnsupportedInput("module map is not homogeneous of degree 0");
    }
  }
  const auto& gb = target_.relation_basis();
  for (const auto& r : source_.relations()) {
    if (!gb.contains(apply(matrix_, r, source_.ring().field()), target_.ring())) {
      throw StructuralError("matrix does not map source relations into target relations");
    }
  }
}

PresentedModule kernel(const ModuleMap& f) {
  const auto& src = f.source();
  auto pre = kernel_modulo(src.ring(), f.matrix(), f.target().relations(), src.degrees());
  return subquotient(src.ring_ptr(), pre, src.relations(), src.degrees());
}

PresentedModule cokernel(const ModuleMap& f) {
  std::vector<Poly> rels = f.target().relations();
  rels.insert(rels.end(), f.matrix().columns.begin(), f.matrix().columns.end());
  return prune(PresentedModule(f.target().ring_ptr(), f.target().degrees(), std::move(rels)));
}

bool is_injective(const ModuleMap& f) {
  const auto& src = f.source();
  auto pre = kernel_modulo(src.ring(), f.matrix(), f.target().relations(), src.degrees());
  const auto& gb = src.relation_basis();
  return std::all_of(pre.begin(), pre.end(), [&](const Poly& v) { return gb.contains(v, src.ring()); });
}

bool is_surjective(const ModuleMap& f) { return cokernel(f).is_zero(); }

bool is_isomorphism(const ModuleMap& f) { return is_injective(f) && is_surjective(f); }

Matrix syzygies(const ModuleMap& f) {
  if (!f.source().is_free_presentation() || !f.target().is_free_presentation()) {
    throw StructuralError("syzygies need a map between free modules");
  }
  Matrix out;
  out.rows = f.source().rank();
  out.columns = kernel_modulo(f.source().ring(), f.matrix(), {}, f.source().degrees());
  return out;
}

}  // namespace dgcm
