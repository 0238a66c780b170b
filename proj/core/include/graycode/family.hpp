#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graycode/code.hpp"
#include "graycode/verify.hpp"

namespace graycode {

enum class Family {
  BinaryComplementary,
  BinaryOddMissingTwo,
  BinaryOddAll,
  QaryLee,
  QaryLeeMissing,
  QaryLeeBounded,
  QaryHamming,
  SubsetsComplementary,
  SubsetsSmc,
  SubsetsAdjacent,
  PermReverse,
  PermSjt,
  MultisetCycle,
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

struct FamilyParams {
  std::optional<int> q;
  std::optional<long long> n;
  std::optional<long long> k;
  std::optional<long long> m;
  std::optional<std::string> anchor;  // qary-lee-missing only
};

/// Existence and shape of a family instance, computed without generating it.
struct FamilyInfo {
  bool exists = false;
  std::string condition;     // why it does (not) exist
  std::uint64_t words = 0;   // code length when it exists
  bool cyclic = false;
  std::string pairing;       // human-readable pairing summary, empty if none
  std::string construction;  // which construction is used
  std::string summary() const;
};

/// Validates parameters; throws InvalidArgument for missing or malformed ones.
FamilyInfo family_info(Family f, const FamilyParams& p);

/// Generates the family instance. Throws NonexistenceError (citing the
/// existence condition) or InvalidArgument.
Code generate(Family f, const FamilyParams& p);

/// The property bundle every generated instance must satisfy.
CodeSpec declared_spec(Family f, const FamilyParams& p);

/// Permutation and multiset families print space separated by default.
bool prefers_spaced_output(Family f);

}  // namespace graycode
