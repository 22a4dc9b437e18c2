#include "dgcm/complex.hpp"

#include <algorithm>

#include "dgcm/error.hpp"

namespace dgcm {

namespace {

Matrix sized_zero(const PresentedModule& src, const PresentedModule& tgt) {
  return Matrix::zero(tgt.rank(), src.rank());
}

}  // namespace

Complex::Complex(RingPtr ring, int lo, std::vector<PresentedModule> terms,
                 std::vector<Matrix> differentials)
    : ring_(std::move(ring)),
      lo_(lo),
      terms_(std::move(terms)),
      differentials_(std::move(differentials)),
      zero_(PresentedModule::zero(ring_)) {
  if (terms_.empty()) {
    if (!differentials_.empty()) throw StructuralError("differentials without terms");
    return;
  }
  if (differentials_.size() + 1 != terms_.size()) {
    throw StructuralError("a complex needs exactly one differential between adjacent terms");
  }
  const auto& field = ring_->field();
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    // Validates shape, homogeneity and well-definedness.
    ModuleMap check(terms_[k], terms_[k + 1], differentials_[k]);
  }
  for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
    Matrix dd = compose(differentials_[k + 1], differentials_[k], field);
    const auto& gb = terms_[k + 2].relation_basis();
    for (const auto& c : dd.columns) {
      if (!gb.contains(c, *ring_)) {
        throw StructuralError("d o d is not zero at degree " + std::to_string(lo_ + k));
      }
    }
  }
}

Complex Complex::zero(RingPtr ring) { return Complex(std::move(ring), 0, {}, {}); }

Complex Complex::single(const PresentedModule& m, int degree) {
  return Complex(m.ring_ptr(), degree, {m}, {});
}

const PresentedModule& Complex::term(int i) const {
  if (terms_.empty() || i < lo_ || i > hi()) return zero_;
  return terms_[i - lo_];
}

Matrix Complex::differential(int i) const {
  if (terms_.empty() || i < lo_ || i >= hi()) return sized_zero(term(i), term(i + 1));
  return differentials_[i - lo_];
}

bool Complex::has_zero_differential() const {
  return std::all_of(differentials_.begin(), differentials_.end(),
                     [](const Matrix& m) { return m.is_zero(); });
}

Matrix ChainMap::at(int i) const {
  auto it = components.find(i);
  if (it != components.end()) return it->second;
  return Matrix::zero(target.term(i).rank(), source.term(i).rank());
}

void check_chain_map(const ChainMap& f) {
  const auto& field = f.source.ring().field();
  int lo = std::min(f.source.lo(), f.target.lo()) - 1;
  int hi = std::max(f.source.hi(), f.target.hi()) + 1;
  for (int i = lo; i <= hi; ++i) {
    ModuleMap validate(f.source.term(i), f.target.term(i), f.at(i));
    Matrix left = compose(f.at(i + 1), f.source.differential(i), field);
    Matrix right = compose(f.target.differential(i), f.at(i), field);
    const auto& gb = f.target.term(i + 1).relation_basis();
    for (std::size_t j = 0; j < left.cols(); ++j) {
      if (!gb.contains(sub(left.columns[j], right.columns[j], field), f.target.ring())) {
        throw StructuralError("not a chain map at degree " + std::to_string(i));
      }
    }
  }
}

Complex shift(const Complex& c, int k) {
  if (c.is_empty()) return c;
  const auto& field = c.ring().field();
  std::vector<PresentedModule> terms;
  std::vector<Matrix> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    terms.push_back(c.term(i));
    if (i < c.hi()) {
      Matrix d = c.differential(i);
      if (k % 2 != 0) d = scale(d, field.neg(1), field);
      diffs.push_back(std::move(d));
    }
  }
  return Complex(c.ring_ptr(), c.lo() - k, std::move(terms), std::move(diffs));
}

Complex twist(const Complex& c, int d) {
  if (c.is_empty()) return c;
  std::vector<PresentedModule> terms;
  std::vector<Matrix> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    terms.push_back(twist(c.term(i), d));
    if (i < c.hi()) diffs.push_back(c.differential(i));
  }
  return Complex(c.ring_ptr(), c.lo(), std::move(terms), std::move(diffs));
}

Complex cone(const ChainMap& f) {
  const Complex& s = f.source;
  const Complex& t = f.target;
  if (!(s.ring() == t.ring())) throw StructuralError("cone of a map between different rings");
  if (s.is_empty() && t.is_empty()) return Complex::zero(s.ring_ptr());
  const auto& field = s.ring().field();
  int lo = s.is_empty() ? t.lo() : (t.is_empty() ? s.lo() - 1 : std::min(s.lo() - 1, t.lo()));
  int hi = s.is_empty() ? t.hi() : (t.is_empty() ? s.hi() - 1 : std::max(s.hi() - 1, t.hi()));
  std::vector<PresentedModule> terms;
  std::vector<Matrix> diffs;
  for (int i = lo; i <= hi; ++i) {
    terms.push_back(direct_sum(s.term(i + 1), t.term(i)));
    if (i == hi) break;
    const std::size_t sa = s.term(i + 1).rank();
    const std::size_t sb = s.term(i + 2).rank();
    Matrix ds = s.differential(i + 1);
    Matrix dt = t.differential(i);
    Matrix fi = f.at(i + 1);
    Matrix d;
    d.rows = sb + t.term(i + 1).rank();
    for (std::size_t j = 0; j < sa; ++j) {
      Poly top = neg(ds.columns[j], field);
      Poly bottom = shift_components(fi.columns[j], static_cast<int>(sb));
      d.columns.push_back(add(top, bottom, field));
    }
    for (std::size_t j = 0; j < t.term(i).rank(); ++j) {
      d.columns.push_back(shift_components(dt.columns[j], static_cast<int>(sb)));
    }
    diffs.push_back(std::move(d));
  }
  return Complex(s.ring_ptr(), lo, std::move(terms), std::move(diffs));
}

ChainMap multiplication_map(const Complex& c, const Poly& x) {
  auto d = homogeneous_degree(x);
  if (!d) throw UnsupportedInput("multiplier must be homogeneous");
  Complex src = twist(c, -*d);
  ChainMap f{src, c, {}};
  const auto& field = c.ring().field();
  if (!c.is_empty()) {
    for (int i = c.lo(); i <= c.hi(); ++i) {
      f.components[i] = multiply_entries(Matrix::identity(c.term(i).rank()), x, field);
    }
  }
  return f;
}

PresentedModule cohomology_at(const Complex& c, int i) {
  const PresentedModule& m = c.term(i);
  if (m.rank() == 0) return PresentedModule::zero(c.ring_ptr());
  std::vector<Poly> cycles;
  const PresentedModule& next = c.term(i + 1);
  Matrix d = c.differential(i);
  if (next.rank() == 0 || d.is_zero()) {
    cycles = Matrix::identity(m.rank()).columns;
  } else {
    cycles = kernel_modulo(c.ring(), d, next.relations(), m.degrees());
  }
  std::vector<Poly> boundaries = m.relations();
  Matrix prev = c.differential(i - 1);
  boundaries.insert(boundaries.end(), prev.columns.begin(), prev.columns.end());
  return subquotient(c.ring_ptr(), cycles, boundaries, m.degrees());
}

bool is_acyclic(const Complex& c) {
  if (c.is_empty()) return true;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    if (!cohomology_at(c, i).is_zero()) return false;
  }
  return true;
}

// ----------------------------------------------------------- free complexes

FreeComplex::FreeComplex(RingPtr ring, int lo, std::vector<Degrees> degrees,
                         std::vector<Matrix> differentials)
    : ring_(std::move(ring)), lo_(lo), degrees_(std::move(degrees)),
      differentials_(std::move(differentials)) {
  if (!degrees_.empty() && differentials_.size() + 1 != degrees_.size()) {
    throw StructuralError("a free complex needs one differential between adjacent terms");
  }
  const auto& field = ring_->field();
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const Matrix& d = differentials_[k];
    if (d.cols() != degrees_[k].size() || d.rows != degrees_[k + 1].size()) {
      throw StructuralError("free complex differential has the wrong shape");
    }
    if (k + 1 < differentials_.size()) {
      if (!compose(differentials_[k + 1], d, field).is_zero()) {
        throw StructuralError("d o d is not zero in a free complex");
      }
    }
  }
}

std::size_t FreeComplex::rank(int i) const { return degrees(i).size(); }

const Degrees& FreeComplex::degrees(int i) const {
  static const Degrees empty;
  if (degrees_.empty() || i < lo_ || i > hi()) return empty;
  return degrees_[i - lo_];
}

Matrix FreeComplex::differential(int i) const {
  if (degrees_.empty() || i < lo_ || i >= hi()) return Matrix::zero(rank(i + 1), rank(i));
  return differentials_[i - lo_];
}

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& d : degrees_) r.push_back(d.size());
  return r;
}

int FreeComplex::length() const {
  int first = -1, last = -1;
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    if (!degrees_[k].empty()) {
      if (first < 0) first = static_cast<int>(k);
      last = static_cast<int>(k);
    }
  }
  return first < 0 ? -1 : last - first;
}

Complex FreeComplex::to_complex() const {
  std::vector<PresentedModule> terms;
  for (const auto& d : degrees_) terms.push_back(PresentedModule::free(ring_, d));
  return Complex(ring_, lo_, std::move(terms), differentials_);
}

Complex hom_into(const FreeComplex& f, const PresentedModule& m) {
  if (f.is_empty()) return Complex::zero(f.ring_ptr());
  const auto& field = f.ring().field();
  const std::size_t r = m.rank();
  auto hom_term = [&](int j) {
    const Degrees& src = f.degrees(-j);
    Degrees deg;
    std::vector<Poly> rels;
    for (std::size_t b = 0; b < src.size(); ++b) {
      for (std::size_t k = 0; k < r; ++k) deg.push_back(m.degrees()[k] - src[b]);
      for (const auto& rel : m.relations()) {
        rels.push_back(shift_components(rel, static_cast<int>(b * r)));
      }
    }
    return PresentedModule(f.ring_ptr(), std::move(deg), std::move(rels));
  };
  const int lo = -f.hi();
  const int hi = -f.lo();
  std::vector<PresentedModule> terms;
  std::vector<Matrix> diffs;
  for (int j = lo; j <= hi; ++j) {
    terms.push_back(hom_term(j));
    if (j == hi) break;
    // (delta phi)(e_a) = sign * phi(d e_a) for e_a a basis vector of F^{-j-1}.
    Matrix d = f.differential(-j - 1);
    const Coeff sign = ((j + 1) % 2 == 0) ? 1 : field.neg(1);
    const std::size_t rows_next = f.rank(-j - 1);
    Matrix delta;
    delta.rows = rows_next * r;
    const std::size_t nb = f.rank(-j);
    std::vector<std::vector<Term>> cols(nb * r);
    for (std::size_t a = 0; a < rows_next; ++a) {
      for (const auto& t : d.columns[a].terms()) {
        const std::size_t b = static_cast<std::size_t>(t.mono.comp);
        Mono mono = t.mono;
        for (std::size_t k = 0; k < r; ++k) {
          mono.comp = static_cast<std::int32_t>(a * r + k);
          cols[b * r + k].push_back({mono, field.mul(sign, t.coeff)});
        }
      }
    }
    for (auto& c : cols) delta.columns.push_back(Poly::from_terms(std::move(c), field));
    diffs.push_back(std::move(delta));
  }
  return Complex(f.ring_ptr(), lo, std::move(terms), std::move(diffs));
}

}  // namespace dgcm
