#include "dgcm/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dgcm/error.hpp"

namespace dgcm {

Poly Poly::constant(Coeff c) {
  PolyBuilder b;
  b.push(Mono{}, c);
  return std::move(b).build();
}

Poly Poly::term(const Mono& m, Coeff c) {
  PolyBuilder b;
  b.push(m, c);
  return std::move(b).build();
}

Poly Poly::from_terms(std::vector<Term> terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  PolyBuilder b;
  b.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    Coeff c = 0;
    std::size_t j = i;
    while (j < terms.size() && compare(terms[j].mono, terms[i].mono) == 0) {
      c = f.add(c, terms[j].coeff);
      ++j;
    }
    b.push(terms[i].mono, c);
    i = j;
  }
  return std::move(b).build();
}

namespace {

// a + s * b, where s is a scalar.
Poly axpy(const Poly& a, const Poly& b, Coeff s, const PrimeField& f) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  PolyBuilder out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    int c = compare(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push(ta[i].mono, ta[i].coeff);
      ++i;
    } else if (c < 0) {
      out.push(tb[j].mono, f.mul(s, tb[j].coeff));
      ++j;
    } else {
      out.push(ta[i].mono, f.add(ta[i].coeff, f.mul(s, tb[j].coeff)));
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push(ta[i].mono, ta[i].coeff);
  for (; j < tb.size(); ++j) out.push(tb[j].mono, f.mul(s, tb[j].coeff));
  return std::move(out).build();
}

}  // namespace

Poly add(const Poly& a, const Poly& b, const PrimeField& f) { return axpy(a, b, 1, f); }

Poly sub(const Poly& a, const Poly& b, const PrimeField& f) {
  return axpy(a, b, f.neg(1), f);
}

Poly neg(const Poly& a, const PrimeField& f) { return scale(a, f.neg(1), f); }

Poly scale(const Poly& a, Coeff c, const PrimeField& f) {
  if (c == 0) return {};
  PolyBuilder b;
  b.reserve(a.size());
  for (const auto& t : a.terms()) b.push(t.mono, f.mul(t.coeff, c));
  return std::move(b).build();
}

Poly mul_term(const Poly& a, const Mono& m, Coeff c, const PrimeField& f) {
  if (c == 0) return {};
  PolyBuilder b;
  b.reserve(a.size());
  for (const auto& t : a.terms()) b.push(multiply(t.mono, m), f.mul(t.coeff, c));
  return std::move(b).build();
}

Poly sub_mul_term(const Poly& a, const Poly& b, const Mono& m, Coeff c, const PrimeField& f) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const Coeff nc = f.neg(c);
  PolyBuilder out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  Mono mb;
  bool have_b = false;
  while (i < ta.size() && j < tb.size()) {
    if (!have_b) {
      mb = multiply(tb[j].mono, m);
      have_b = true;
    }
    int cmp = compare(ta[i].mono, mb);
    if (cmp > 0) {
      out.push(ta[i].mono, ta[i].coeff);
      ++i;
    } else if (cmp < 0) {
      out.push(mb, f.mul(nc, tb[j].coeff));
      ++j;
      have_b = false;
    } else {
      out.push(mb, f.add(ta[i].coeff, f.mul(nc, tb[j].coeff)));
      ++i;
      ++j;
      have_b = false;
    }
  }
  for (; i < ta.size(); ++i) out.push(ta[i].mono, ta[i].coeff);
  for (; j < tb.size(); ++j) out.push(multiply(tb[j].mono, m), f.mul(nc, tb[j].coeff));
  return std::move(out).build();
}

Poly mul(const Poly& scalar, const Poly& v, const PrimeField& f) {
  Poly acc;
  for (const auto& t : scalar.terms()) {
    if (t.mono.comp != 0) throw StructuralError("product of two module elements");
    acc = add(acc, mul_term(v, t.mono, t.coeff, f), f);
  }
  return acc;
}

Poly pow(const Poly& a, unsigned e, const PrimeField& f) {
  Poly result = Poly::constant(1);
  Poly base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base, f);
    e >>= 1;
    if (e > 0) base = mul(base, base, f);
  }
  return result;
}

Poly make_monic(const Poly& a, const PrimeField& f) {
  if (a.is_zero() || a.lead().coeff == 1) return a;
  return scale(a, f.inv(a.lead().coeff), f);
}

Poly component(const Poly& v, int j) {
  PolyBuilder b;
  for (const auto& t : v.terms()) {
    if (t.mono.comp == j) {
      Mono m = t.mono;
      m.comp = 0;
      m.block = 0;
      b.push(m, t.coeff);
    }
  }
  return std::move(b).build();
}

Poly embed(const Poly& p, int j, std::uint8_t block) {
  PolyBuilder b;
  b.reserve(p.size());
  for (const auto& t : p.terms()) {
    Mono m = t.mono;
    m.comp = j;
    m.block = block;
    b.push(m, t.coeff);
  }
  return std::move(b).build();
}

Poly shift_components(const Poly& v, int offset) {
  if (offset == 0) return v;
  // The relative order of terms is unchanged by a uniform renumbering.
  PolyBuilder b;
  b.reserve(v.size());
  for (const auto& t : v.terms()) {
    Mono m = t.mono;
    m.comp += offset;
    b.push(m, t.coeff);
  }
  return std::move(b).build();
}

Poly with_block(const Poly& v, std::uint8_t block) {
  PolyBuilder b;
  b.reserve(v.size());
  for (const auto& t : v.terms()) {
    Mono m = t.mono;
    m.block = block;
    b.push(m, t.coeff);
  }
  return std::move(b).build();
}

Poly from_components(std::span<const Poly> comps, const PrimeField& f) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    for (const auto& t : comps[j].terms()) {
      Mono m = t.mono;
      m.comp = static_cast<std::int32_t>(j);
      terms.push_back({m, t.coeff});
    }
  }
  return Poly::from_terms(std::move(terms), f);
}

std::vector<Poly> to_components(const Poly& v, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v.terms()) {
    if (t.mono.comp < 0 || static_cast<std::size_t>(t.mono.comp) >= rank) {
      throw StructuralError("module element has a component outside the free module");
    }
    Mono m = t.mono;
    m.comp = 0;
    m.block = 0;
    parts[t.mono.comp].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& p : parts) {
    // Terms of one component keep their relative order.
    PolyBuilder b;
    for (const auto& t : p) b.push(t.mono, t.coeff);
    out.push_back(std::move(b).build());
  }
  return out;
}

std::optional<int> homogeneous_degree(const Poly& v, std::span<const int> comp_degrees) {
  if (v.is_zero()) return std::nullopt;
  std::optional<int> d;
  for (const auto& t : v.terms()) {
    if (t.mono.comp < 0 || static_cast<std::size_t>(t.mono.comp) >= comp_degrees.size()) {
      throw StructuralError("module element has a component outside the free module");
    }
    int td = t.mono.deg + comp_degrees[t.mono.comp];
    if (!d) {
      d = td;
    } else if (*d != td) {
      return std::nullopt;
    }
  }
  return d;
}

bool is_homogeneous(const Poly& v, std::span<const int> comp_degrees) {
  return v.is_zero() || homogeneous_degree(v, comp_degrees).has_value();
}

bool is_monomial(const Poly& p) { return p.size() == 1; }

Poly variable(const Ring& ring, std::size_t i) { return Poly::term(ring.variable(i), 1); }

std::string to_string(const Poly& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  const auto& f = ring.field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::int64_t c = f.to_signed(t.coeff);
    bool constant = is_constant(t.mono);
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    bool wrote = false;
    if (c != 1 || constant) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (wrote) os << '*';
      os << ring.variables()[i];
      if (t.mono.exp[i] > 1) os << '^' << t.mono.exp[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace dgcm
