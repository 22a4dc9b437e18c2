#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgcm/field.hpp"

namespace dgcm {

inline constexpr int kMaxVars = 12;

/// A monomial times a basis vector of a free module.
///
/// `deg` caches the weighted degree of the monomial part only; degrees of
/// basis vectors live with the free module that owns them.  `block` is used by
/// elimination orders: every block-0 term is larger than every block-1 term.
struct Mono {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t deg = 0;
  std::int32_t comp = 0;
  std::uint8_t block = 0;

  bool operator==(const Mono&) const = default;
};

/// Block, then weighted degree, then reverse lexicographic, then position.
inline int compare(const Mono& a, const Mono& b) {
  if (a.block != b.block) return a.block < b.block ? 1 : -1;
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

/// True when `a` divides `b` (same basis vector, exponentwise <=).
inline bool divides(const Mono& a, const Mono& b) {
  if (a.comp != b.comp || a.block != b.block) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

/// Product of a module monomial with a pure monomial (or of two pure ones).
inline Mono multiply(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  r.comp = a.comp + b.comp;
  r.block = a.block > b.block ? a.block : b.block;
  return r;
}

/// b / a as a pure monomial; requires divides(a, b).
inline Mono quotient(const Mono& b, const Mono& a) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  r.deg = b.deg - a.deg;
  return r;
}

inline bool is_constant(const Mono& m) {
  for (auto e : m.exp) {
    if (e != 0) return false;
  }
  return true;
}

/// Polynomial ring k[x_1..x_n] over a prime field with positive variable
/// weights.
class Ring {
 public:
  Ring(std::uint32_t characteristic, std::vector<std::string> variables,
       std::vector<int> weights = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  std::span<const int> weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  bool standard_grading() const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  Mono variable(std::size_t i) const;
  /// Weighted degree of an exponent vector.
  std::int32_t degree_of(const std::array<std::uint16_t, kMaxVars>& exp) const;
  Mono lcm(const Mono& a, const Mono& b) const;
  bool coprime(const Mono& a, const Mono& b) const;

  bool operator==(const Ring& other) const {
    return field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables,
                  std::vector<int> weights = {});

}  // namespace dgcm
