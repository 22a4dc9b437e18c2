#include "dgcm/ideal.hpp"

#include <algorithm>
#include <mutex>

#include "dgcm/error.hpp"
#include "dgcm/parse.hpp"

namespace dgcm {

struct Ideal::Cache {
  std::once_flag once;
  GroebnerBasis gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw StructuralError("ideal without a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms()) {
      if (t.mono.comp != 0 || t.mono.block != 0) {
        throw StructuralError("ideal generator is a module element");
      }
    }
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Poly> gens;
  for (const auto& s : generators) gens.push_back(parse_polynomial(s, *ring));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::unit(RingPtr ring) { return Ideal(std::move(ring), {Poly::constant(1)}); }

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(variable(*ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Poly& g) { return homogeneous_degree(g).has_value(); });
}

const GroebnerBasis& Ideal::groebner_basis() const {
  std::call_once(cache_->once,
                 [this] { cache_->gb = GroebnerBasis::compute(*ring_, generators_); });
  return cache_->gb;
}

bool Ideal::contains(const Poly& f) const { return groebner_basis().contains(f, *ring_); }

bool Ideal::contains(const Ideal& other) const {
  if (!(*ring_ == *other.ring_)) throw StructuralError("ideals over different rings");
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Poly& g) { return contains(g); });
}

bool Ideal::operator==(const Ideal& other) const {
  if (!(*ring_ == *other.ring_)) return false;
  return groebner_basis() == other.groebner_basis();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!(*ring_ == *other.ring_)) throw StructuralError("ideals over different rings");
  std::vector<Poly> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Poly& f) const {
  std::vector<Poly> gens = generators_;
  gens.push_back(f);
  return Ideal(ring_, std::move(gens));
}

bool Ideal::is_monomial() const {
  const auto& els = groebner_basis().elements();
  return std::all_of(els.begin(), els.end(), [](const Poly& g) { return dgcm::is_monomial(g); });
}

bool Ideal::is_variable_ideal() const {
  for (const auto& g : groebner_basis().elements()) {
    if (!dgcm::is_monomial(g)) return false;
    const Mono& m = g.lead().mono;
    int total = 0;
    for (auto e : m.exp) total += e;
    if (total != 1) return false;
  }
  return true;
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += dgcm::to_string(generators_[i], *ring_);
  }
  return s + ")";
}

GroebnerBasis gb_compute(const Ideal& ideal, MonomialOrder order) {
  (void)order;  // only graded reverse lexicographic is implemented
  return ideal.groebner_basis();
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb, const Ring& ring) {
  return gb.normal_form(f, ring);
}

int ideal_dimension(const GroebnerBasis& gb, std::size_t nvars) {
  if (gb.has_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(divisibility_mask(m));
  int best = 0;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](std::uint32_t sup) { return (sup & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

int ideal_dimension(const Ideal& ideal) {
  return ideal_dimension(ideal.groebner_basis(), ideal.ring().nvars());
}

namespace {

std::vector<Ideal> transversal_primes(const RingPtr& ring, const std::vector<std::uint32_t>& supports) {
  std::vector<Ideal> out;
  for (auto s : supports) {
    if (s == 0) return out;  // a unit generator: no primes
  }
  const std::size_t n = ring->nvars();
  std::vector<std::uint32_t> covers;
  const std::uint32_t limit = 1u << n;
  std::vector<std::uint32_t> order(limit);
  for (std::uint32_t s = 0; s < limit; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (std::uint32_t s : order) {
    bool hits = std::all_of(supports.begin(), supports.end(),
                            [s](std::uint32_t sup) { return (sup & s) != 0; });
    if (!hits) continue;
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [s](std::uint32_t c) { return (c & ~s) == 0; });
    if (minimal) covers.push_back(s);
  }
  for (auto c : covers) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) {
      if (c & (1u << i)) gens.push_back(variable(*ring, i));
    }
    out.emplace_back(ring, std::move(gens));
  }
  return out;
}

}  // namespace

std::vector<Ideal> monomial_minimal_primes(const Ideal& ideal) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) {
    if (!is_monomial(g)) {
      throw UnsupportedInput("minimal primes are only computed for monomial ideals; " +
                             to_string(g, ideal.ring()) + " is not a monomial");
    }
    supports.push_back(divisibility_mask(g.lead().mono));
  }
  return transversal_primes(ideal.ring_ptr(), supports);
}

std::optional<std::vector<Ideal>> minimal_primes_if_monomial(const Ideal& ideal) {
  if (!ideal.is_monomial()) return std::nullopt;
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.groebner_basis().elements()) {
    supports.push_back(divisibility_mask(g.lead().mono));
  }
  return transversal_primes(ideal.ring_ptr(), supports);
}

}  // namespace dgcm
