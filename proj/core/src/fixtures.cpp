#include "dgcm/fixtures.hpp"

#include <cstddef>

namespace dgcm {

namespace detail {
extern const char* const kFixtureNames[];
extern const char* const kFixtureTexts[];
extern const std::size_t kFixtureCount;
}  // namespace detail

const std::vector<Fixture>& bundled_examples() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    for (std::size_t i = 0; i < detail::kFixtureCount; ++i) v.push_back({detail::kFixtureNames[i], detail::kFixtureTexts[i]});
    return v;
  }();
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : bundled_examples())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace dgcm
