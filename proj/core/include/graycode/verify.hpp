#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graycode/code.hpp"

namespace graycode {

enum class Metric {
  Hamming,
  Lee,
  /// Consecutive words are related by swapping two neighbouring entries.
  /// On incidence vectors this is the adjacent interchange property.
  AdjacentTransposition,
  /// Binary only: two positions change and only 0s lie strictly between them.
  StrongMinimalChange,
  /// Binary only: two positions change and the interior is all 0s or all 1s.
  ComplementarySMC,
};

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

/// True iff `a` and `b` are at distance exactly one under `m`.
bool is_unit_step(Metric m, WordView a, WordView b, int radix);

/// Expected multiset of words for the completeness check.
class Universe {
 public:
  explicit Universe(Code words);

  /// Every word of Z_q^n.
  static Universe all(int radix, std::size_t length);
  /// Z_q^n minus the listed words.
  static Universe all_except(int radix, std::size_t length, const std::vector<Word>& excluded);
  /// Binary words of length m and weight k.
  static Universe fixed_weight(std::size_t m, std::size_t k);
  /// Permutations of 1..n, stored with radix n + 1.
  static Universe permutations(std::size_t n);
  /// All distinct rearrangements of a multiset of digits.
  static Universe arrangements(int radix, std::vector<Digit> multiset);

  const Code& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  Code words_;  // lexicographically sorted
};

enum class PairingRule {
  Complement,   // binary complement
  AddDiagonal,  // w + shift * (1, ..., 1)
  Reversal,     // left-right mirror of the word
};

std::string_view to_string(PairingRule r);
std::optional<PairingRule> parse_pairing(std::string_view name);

struct Pairing {
  PairingRule rule = PairingRule::Complement;
  int shift = 1;  // AddDiagonal only
  /// Allowed separations: forward cyclic index distance for cyclic specs,
  /// absolute index distance otherwise.
  std::set<std::int64_t> separations;
};

Word paired_word(const Pairing& p, WordView w, int radix);

struct CodeSpec {
  Metric metric = Metric::Hamming;
  bool require_step_one = true;
  bool require_cyclic = false;
  std::optional<Universe> universe;
  std::optional<Pairing> pairing;
  std::optional<Word> first;
  std::optional<Word> last;
};

struct Violation {
  std::string property;  // "step", "wrap", "first", "last", "duplicate", "missing", "unexpected", "pair-absent", "separation"
  std::optional<std::size_t> index;
  std::optional<std::size_t> other_index;
  std::string detail;
};

using SeparationProfile = std::map<std::int64_t, std::size_t>;

struct Report {
  bool pass = true;
  std::vector<Violation> violations;
  /// Violations beyond the storage cap are only counted.
  std::size_t suppressed = 0;
  std::optional<SeparationProfile> separation_profile;

  void add(Violation v);
  /// Combines another report (e.g. one computed over a different index range).
  void merge(const Report& other);
  std::size_t violation_count() const { return violations.size() + suppressed; }
};

inline constexpr std::size_t kMaxStoredViolations = 256;

/// Checks steps (with wrap iff required), endpoints, completeness and pairing,
/// in that order. Property failures become Report violations; an inapplicable
/// spec throws InvalidArgument.
Report verify_code(const Code& c, const CodeSpec& spec);

/// Multiset of separations from every word to its paired word. Throws if a
/// paired word is missing. Cyclic codes use forward distance (j - i) mod |c|.
SeparationProfile separation_profile(const Code& c, const Pairing& p);

std::string describe(const Report& r, std::size_t max_lines = 8);
std::string describe(const SeparationProfile& p);

}  // namespace graycode
