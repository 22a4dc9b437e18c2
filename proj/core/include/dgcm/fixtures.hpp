#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dgcm {

/// A problem file shipped with the library; its "expected" field pins the
/// verdicts and invariants of the live computation.
struct Fixture {
  std::string name;
  std::string text;
};

const std::vector<Fixture>& bundled_examples();
/// nullptr when no fixture has this name.
const Fixture* find_fixture(std::string_view name);

}  // namespace dgcm
