#include "dgcm/groebner.hpp"

#include <algorithm>

#include "dgcm/error.hpp"

namespace dgcm {

std::uint32_t divisibility_mask(const Mono& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] != 0) mask |= (1u << i);
  }
  return mask;
}

namespace {

Poly drop_lead(const Poly& f) {
  PolyBuilder b;
  const auto& t = f.terms();
  b.reserve(t.size());
  for (std::size_t i = 1; i < t.size(); ++i) b.push(t[i].mono, t[i].coeff);
  return std::move(b).build();
}

// Generic full reduction: `divisor` returns the index of a monic element whose
// leading term divides the given monomial, or -1.
template <class Lookup, class Get>
Poly full_reduce(Poly f, const Ring& ring, Lookup divisor, Get element) {
  const auto& field = ring.field();
  std::vector<Term> rem;
  while (!f.is_zero()) {
    const Term lt = f.lead();
    int idx = divisor(lt.mono);
    if (idx >= 0) {
      const Poly& g = element(idx);
      Mono q = quotient(lt.mono, g.lead().mono);
      // g is monic, so subtracting lt.coeff * q * g cancels the lead.
      f = sub_mul_term(f, g, q, lt.coeff, field);
    } else {
      rem.push_back(lt);
      f = drop_lead(f);
    }
  }
  PolyBuilder b;
  b.reserve(rem.size());
  for (const auto& t : rem) b.push(t.mono, t.coeff);
  return std::move(b).build();
}

}  // namespace

int GroebnerEngine::find_divisor(const Mono& m, std::uint32_t mask, int skip) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto& e = basis_[k];
    if (!e.active || static_cast<int>(k) == skip) continue;
    if ((e.mask & ~mask) != 0) continue;
    if (divides(e.poly.lead().mono, m)) return static_cast<int>(k);
  }
  return -1;
}

Poly GroebnerEngine::reduce_excluding(Poly f, int skip) const {
  return full_reduce(
      std::move(f), *ring_,
      [&](const Mono& m) { return find_divisor(m, divisibility_mask(m), skip); },
      [&](int k) -> const Poly& { return basis_[k].poly; });
}

Poly GroebnerEngine::reduce(const Poly& f) const { return reduce_excluding(f, -1); }

bool GroebnerEngine::add(const Poly& g) {
  for (const auto& t : g.terms()) {
    if (t.mono.comp != 0 || t.mono.block != 0) ideal_mode_ = false;
  }
  Poly h = make_monic(reduce(g), ring_->field());
  if (h.is_zero()) return false;
  basis_.push_back({h, divisibility_mask(h.lead().mono), true});
  update(static_cast<int>(basis_.size()) - 1);
  return true;
}

void GroebnerEngine::update(int h) {
  const Mono& lh = basis_[h].poly.lead().mono;
  struct Cand {
    int g;
    Mono lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  for (std::size_t g = 0; g < basis_.size(); ++g) {
    if (static_cast<int>(g) == h || !basis_[g].active) continue;
    const Mono& lg = basis_[g].poly.lead().mono;
    if (lg.comp != lh.comp || lg.block != lh.block) continue;
    bool cop = ideal_mode_ && ring_->coprime(lh, lg);
    cands.push_back({static_cast<int>(g), ring_->lcm(lh, lg), cop});
  }

  std::vector<Cand> kept;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Cand& p = cands[k];
    bool keep = p.coprime;
    if (!keep) {
      keep = true;
      for (std::size_t l = k + 1; l < cands.size() && keep; ++l) {
        if (divides(cands[l].lcm, p.lcm)) keep = false;
      }
      for (const auto& d : kept) {
        if (!keep) break;
        if (divides(d.lcm, p.lcm)) keep = false;
      }
    }
    if (keep) kept.push_back(p);
  }

  std::vector<Pair> next;
  next.reserve(pairs_.size() + kept.size());
  for (const auto& pr : pairs_) {
    bool drop = false;
    if (divides(lh, pr.lcm)) {
      Mono l1 = ring_->lcm(basis_[pr.i].poly.lead().mono, lh);
      Mono l2 = ring_->lcm(lh, basis_[pr.j].poly.lead().mono);
      drop = !(l1 == pr.lcm) && !(l2 == pr.lcm);
    }
    if (!drop) next.push_back(pr);
  }
  for (const auto& d : kept) {
    if (!d.coprime) next.push_back({d.g, h, d.lcm});
  }
  pairs_ = std::move(next);

  for (std::size_t g = 0; g < basis_.size(); ++g) {
    if (static_cast<int>(g) == h || !basis_[g].active) continue;
    if (divides(lh, basis_[g].poly.lead().mono)) basis_[g].active = false;
  }
}

void GroebnerEngine::complete() {
  const auto& field = ring_->field();
  while (!pairs_.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Mono& a = pairs_[k].lcm;
      const Mono& b = pairs_[best].lcm;
      if (a.deg < b.deg || (a.deg == b.deg && compare(a, b) < 0)) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();

    const Poly& gi = basis_[p.i].poly;
    const Poly& gj = basis_[p.j].poly;
    Mono qi = quotient(p.lcm, gi.lead().mono);
    Mono qj = quotient(p.lcm, gj.lead().mono);
    Poly s = sub_mul_term(mul_term(gi, qi, 1, field), gj, qj, 1, field);
    Poly h = make_monic(reduce(s), field);
    if (h.is_zero()) continue;
    basis_.push_back({std::move(h), 0, true});
    basis_.back().mask = divisibility_mask(basis_.back().poly.lead().mono);
    update(static_cast<int>(basis_.size()) - 1);
  }
}

std::vector<Poly> GroebnerEngine::reduced_basis() const {
  std::vector<int> active;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k].active) active.push_back(static_cast<int>(k));
  }
  std::vector<Poly> out;
  out.reserve(active.size());
  const auto& field = ring_->field();
  for (int k : active) {
    const Poly& g = basis_[k].poly;
    Poly tail = reduce_excluding(drop_lead(g), k);
    PolyBuilder b;
    b.push(g.lead().mono, g.lead().coeff);
    for (const auto& t : tail.terms()) b.push(t.mono, t.coeff);
    out.push_back(make_monic(std::move(b).build(), field));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return compare(a.lead().mono, b.lead().mono) < 0;
  });
  return out;
}

GroebnerBasis GroebnerBasis::compute(const Ring& ring, const std::vector<Poly>& generators) {
  GroebnerEngine engine(ring);
  for (const auto& g : generators) {
    if (!g.is_zero()) engine.add(g);
  }
  engine.complete();
  GroebnerBasis gb;
  gb.elements_ = engine.reduced_basis();
  for (const auto& e : gb.elements_) gb.masks_.push_back(divisibility_mask(e.lead().mono));
  return gb;
}

Poly GroebnerBasis::normal_form(const Poly& f, const Ring& ring) const {
  return full_reduce(
      f, ring,
      [&](const Mono& m) {
        std::uint32_t mask = divisibility_mask(m);
        for (std::size_t k = 0; k < elements_.size(); ++k) {
          if ((masks_[k] & ~mask) != 0) continue;
          if (divides(elements_[k].lead().mono, m)) return static_cast<int>(k);
        }
        return -1;
      },
      [&](int k) -> const Poly& { return elements_[k]; });
}

bool GroebnerBasis::has_unit(int comp) const {
  for (const auto& e : elements_) {
    const Mono& m = e.lead().mono;
    if (m.comp == comp && m.block == 0 && is_constant(m)) return true;
  }
  return false;
}

std::vector<Mono> GroebnerBasis::leading_monomials() const {
  std::vector<Mono> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.lead().mono);
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const Ring& ring) {
  return full_reduce(
      f, ring,
      [&](const Mono& m) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (divides(basis[k].lead().mono, m)) return static_cast<int>(k);
        }
        return -1;
      },
      [&](int k) -> const Poly& { return basis[k]; });
}

}  // namespace dgcm
