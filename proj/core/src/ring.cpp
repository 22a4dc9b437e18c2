#include "dgcm/ring.hpp"

#include <algorithm>
#include <set>

#include "dgcm/error.hpp"

namespace dgcm {

Ring::Ring(std::uint32_t characteristic, std::vector<std::string> variables,
           std::vector<int> weights)
    : field_(characteristic), names_(std::move(variables)), weights_(std::move(weights)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw UnsupportedInput("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw StructuralError("duplicate variable name");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) {
    throw StructuralError("one weight per variable is required");
  }
  for (int w : weights_) {
    if (w <= 0) throw UnsupportedInput("variable weights must be positive");
  }
}

bool Ring::standard_grading() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Mono Ring::variable(std::size_t i) const {
  Mono m;
  m.exp[i] = 1;
  m.deg = weights_[i];
  return m;
}

std::int32_t Ring::degree_of(const std::array<std::uint16_t, kMaxVars>& exp) const {
  std::int32_t d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += weights_[i] * exp[i];
  return d;
}

Mono Ring::lcm(const Mono& a, const Mono& b) const {
  Mono r = a;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (b.exp[i] > a.exp[i]) {
      r.deg += weights_[i] * (b.exp[i] - a.exp[i]);
      r.exp[i] = b.exp[i];
    }
  }
  return r;
}

bool Ring::coprime(const Mono& a, const Mono& b) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables,
                  std::vector<int> weights) {
  return std::make_shared<const Ring>(characteristic, std::move(variables), std::move(weights));
}

}  // namespace dgcm
