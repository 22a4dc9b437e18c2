#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgcm/dg_model.hpp"

namespace dgcm {

/// A module over R = P/I as written in a problem file.
struct ModuleDescriptor {
  enum class Kind { Presented, Quotient, Ideal, Canonical, Free };
  Kind kind = Kind::Free;
  /// Presented and Free: generator degrees.  Quotient: a single degree.
  Degrees degrees;
  /// Presented: relation columns, each a list of polynomial strings.
  std::vector<std::vector<std::string>> relations;
  /// Quotient and Ideal: polynomial strings.
  std::vector<std::string> generators;
  int rank = 0;

  bool operator==(const ModuleDescriptor&) const = default;
};

struct ComplexDescriptor {
  std::map<int, ModuleDescriptor> terms;
  /// Keyed by source degree; columns of polynomial strings.
  std::map<int, std::vector<std::vector<std::string>>> differentials;

  bool operator==(const ComplexDescriptor&) const = default;
};

struct ConstructionDescriptor {
  Construction type = Construction::Koszul;
  std::vector<std::string> elements;
  std::optional<ModuleDescriptor> module;
  int shift = 0;
  std::optional<ComplexDescriptor> complex;
  std::vector<std::string> h0_ideal;
  bool nonnegative = false;

  bool operator==(const ConstructionDescriptor&) const = default;
};

struct DGModuleDescriptor {
  std::string name;
  ComplexDescriptor complex;

  bool operator==(const DGModuleDescriptor&) const = default;
};

struct ProblemOptions {
  std::uint64_t seed = 1;
  int max_tries = 64;
  int t_max = 4;

  bool operator==(const ProblemOptions&) const = default;
};

struct ProblemFile {
  std::string name;
  std::string description;
  std::uint32_t characteristic = 32003;
  bool characteristic_given = false;
  std::vector<std::string> variables;
  std::vector<int> weights;
  std::vector<std::string> ideal;
  ConstructionDescriptor construction;
  std::vector<DGModuleDescriptor> modules;
  std::vector<std::vector<std::string>> primes;
  ProblemOptions options;
  /// Expected report fragment (compact JSON), empty when absent.
  std::string expected;

  bool operator==(const ProblemFile&) const = default;
};

/// Parses and validates a problem file.  Diagnostics are ParseError with the
/// line and column of the offending text.
ProblemFile parse_problem(std::string_view text);
std::string serialize_problem(const ProblemFile& p);

struct Problem {
  ProblemFile file;
  RingPtr ring;
  Ideal base;
  DGRingModel model;
  std::vector<std::pair<std::string, DGModuleModel>> modules;
  std::vector<Ideal> primes;
};

/// Builds the models.  `characteristic` overrides the file when given.
Problem build_problem(const ProblemFile& file, std::optional<std::uint32_t> characteristic = std::nullopt);

PresentedModule build_module(const ModuleDescriptor& d, const Ideal& base);
Complex build_complex(const ComplexDescriptor& d, const Ideal& base);

}  // namespace dgcm
