#include "graycode/family.hpp"

#include <array>
#include <sstream>

#include "graycode/binary.hpp"
#include "graycode/combinations.hpp"
#include "graycode/error.hpp"
#include "graycode/permutations.hpp"
#include "graycode/qary.hpp"
#include "graycode/transform.hpp"

namespace graycode {

namespace {

struct Name {
  Family family;
  std::string_view name;
};

constexpr std::array<Name, 13> kNames{{
    {Family::BinaryComplementary, "binary-complementary"},
    {Family::BinaryOddMissingTwo, "binary-odd-missing-two"},
    {Family::BinaryOddAll, "binary-odd-all"},
    {Family::QaryLee, "qary-lee"},
    {Family::QaryLeeMissing, "qary-lee-missing"},
    {Family::QaryLeeBounded, "qary-lee-bounded"},
    {Family::QaryHamming, "qary-hamming"},
    {Family::SubsetsComplementary, "subsets-complementary"},
    {Family::SubsetsSmc, "subsets-smc"},
    {Family::SubsetsAdjacent, "subsets-adjacent"},
    {Family::PermReverse, "perm-reverse"},
    {Family::PermSjt, "perm-sjt"},
    {Family::MultisetCycle, "multiset-cycle"},
}};

constexpr std::uint64_t kWordCap = std::uint64_t{1} << 40;

long long need(const std::optional<long long>& v, std::string_view flag, long long lo, long long hi) {
  if (!v) throw InvalidArgument("missing --" + std::string(flag));
  if (*v < lo || *v > hi) {
    throw InvalidArgument("--" + std::string(flag) + " = " + std::to_string(*v) +
                          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return *v;
}

int need_q(const FamilyParams& p, int lo) {
  std::optional<long long> q;
  if (p.q) q = *p.q;
  return static_cast<int>(need(q, "q", lo, kMaxRadix));
}

std::uint64_t power(std::uint64_t base, long long exp) {
  std::uint64_t r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > kWordCap / base) return kWordCap;
    r *= base;
  }
  return r;
}

std::string separations_text(const std::set<std::int64_t>& s) {
  std::ostringstream os;
  bool first = true;
  for (auto v : s) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  return os.str();
}

std::string pairing_text(std::string_view rule, const std::set<std::int64_t>& s) {
  return std::string(rule) + (s.size() == 1 ? " at separation " : " at separations ") +
         separations_text(s);
}

std::set<std::int64_t> bounded_separations(int q, long long n) {
  const auto mid = static_cast<std::int64_t>(power(static_cast<std::uint64_t>(q), n - 1));
  std::set<std::int64_t> s;
  for (int d = 1; d <= q - 1; ++d) {
    s.insert(mid - d);
    s.insert(mid + d);
  }
  return s;
}

Word missing_anchor(int q, long long n, const FamilyParams& p) {
  if (p.anchor) {
    Word w = Word::parse(*p.anchor, q);
    if (w.length() != static_cast<std::size_t>(n)) {
      throw InvalidArgument("--anchor must have " + std::to_string(n) + " digits");
    }
    return w;
  }
  std::vector<Digit> d(static_cast<std::size_t>(n), 0);
  d[1] = static_cast<Digit>(q - 1);
  return Word(q, std::move(d));
}

struct Shape {
  FamilyInfo info;
  CodeSpec spec;
};

Shape shape(Family f, const FamilyParams& p) {
  Shape s;
  FamilyInfo& info = s.info;
  CodeSpec& spec = s.spec;
  auto pair = [&](PairingRule rule, std::string_view label, std::set<std::int64_t> seps,
                  int shift = 1) {
    info.pairing = pairing_text(label, seps);
    spec.pairing = Pairing{rule, shift, std::move(seps)};
  };
  switch (f) {
    case Family::BinaryComplementary: {
      const long long n = need(p.n, "n", 1, 24);
      info.exists = n % 2 == 0;
      info.condition = info.exists ? "n even" : "n odd: complementary binary code cannot exist";
      info.words = power(2, n);
      info.cyclic = true;
      info.construction = "0P followed by 1 and the complement of P, P an endpoint-controlled path";
      spec.require_cyclic = true;
      pair(PairingRule::Complement, "complement", {static_cast<std::int64_t>(info.words / 2)});
      break;
    }
    case Family::BinaryOddMissingTwo: {
      const long long n = need(p.n, "n", 3, 25);
      info.exists = n % 2 == 1;
      info.condition = info.exists ? "n odd, n >= 3" : "n even: use binary-complementary";
      info.words = power(2, n) - 2;
      info.cyclic = true;
      info.construction = "doubled path with its first word dropped, then complemented";
      spec.require_cyclic = true;
      pair(PairingRule::Complement, "complement",
           {static_cast<std::int64_t>(power(2, n - 1)) - 1});
      break;
    }
    case Family::BinaryOddAll: {
      const long long n = need(p.n, "n", 3, 25);
      info.exists = n % 2 == 1;
      info.condition = info.exists ? "n odd, n >= 3" : "n even: use binary-complementary";
      info.words = power(2, n);
      info.cyclic = true;
      info.construction = "doubling of the complementary code on n - 1 bits";
      spec.require_cyclic = true;
      const auto h = static_cast<std::int64_t>(power(2, n - 1));
      pair(PairingRule::Complement, "complement", {h - 1, h + 1});
      break;
    }
    case Family::QaryLee: {
      const int q = need_q(p, 2);
      const long long n = need(p.n, "n", 1, 40);
      info.exists = n == 1 || n % 2 == 0 || q % 2 == 1;
      info.condition = info.exists
                           ? "n = 1, n even or q odd"
                           : "does not exist in Lee metric; see qary-lee-missing / qary-hamming";
      info.words = power(static_cast<std::uint64_t>(q), n);
      info.cyclic = true;
      info.construction = "diagonal blocks of a 0...0 -> 1...1 Lee path on n - 1 digits";
      spec.metric = Metric::Lee;
      spec.require_cyclic = true;
      pair(PairingRule::AddDiagonal, "diagonal shift",
           {static_cast<std::int64_t>(power(static_cast<std::uint64_t>(q), n - 1))});
      break;
    }
    case Family::QaryLeeMissing: {
      const int q = need_q(p, 4);
      const long long n = need(p.n, "n", 3, 40);
      info.exists = q % 2 == 0 && n % 2 == 1;
      info.condition = info.exists ? "q even, n odd" : "needs q even and n odd; use qary-lee";
      info.words = power(static_cast<std::uint64_t>(q), n) - static_cast<std::uint64_t>(q);
      info.cyclic = true;
      info.construction = "diagonal blocks of an expanded shifted monotone path, q words removed";
      spec.metric = Metric::Lee;
      spec.require_cyclic = true;
      pair(PairingRule::AddDiagonal, "diagonal shift",
           {static_cast<std::int64_t>(power(static_cast<std::uint64_t>(q), n - 1)) - 1});
      break;
    }
    case Family::QaryLeeBounded: {
      const int q = need_q(p, 4);
      const long long n = need(p.n, "n", 3, 40);
      info.exists = q % 2 == 0 && n % 2 == 1;
      info.condition = info.exists ? "q even, n odd" : "needs q even and n odd; use qary-lee";
      info.words = power(static_cast<std::uint64_t>(q), n);
      info.cyclic = true;
      info.construction = "last-digit sweep doubling of the code on n - 1 digits";
      spec.metric = Metric::Lee;
      spec.require_cyclic = true;
      pair(PairingRule::AddDiagonal, "diagonal shift", bounded_separations(q, n));
      break;
    }
    case Family::QaryHamming: {
      const int q = need_q(p, 2);
      const long long n = need(p.n, "n", 1, 40);
      info.exists = q >= 3 || n == 1 || n % 2 == 0;
      info.condition = info.exists ? "q >= 3, or q = 2 with n even or n = 1"
                                   : "q = 2 and n odd: complementary binary code cannot exist";
      info.words = power(static_cast<std::uint64_t>(q), n);
      info.cyclic = true;
      info.construction = "diagonal blocks of a 0...0 -> 1...1 Hamming path on n - 1 digits";
      spec.require_cyclic = true;
      pair(PairingRule::AddDiagonal, "diagonal shift",
           {static_cast<std::int64_t>(power(static_cast<std::uint64_t>(q), n - 1))});
      break;
    }
    case Family::SubsetsComplementary: {
      const long long n = need(p.n, "n", 1, 12);
      info.exists = true;
      info.condition = "any n >= 1";
      info.words = combinations::binomial(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(n));
      info.cyclic = true;
      info.construction = "mirrored strong minimal change order with a 0 prepended, then complements";
      spec.metric = Metric::ComplementarySMC;
      spec.require_cyclic = true;
      pair(PairingRule::Complement, "complement", {static_cast<std::int64_t>(info.words / 2)});
      break;
    }
    case Family::SubsetsSmc: {
      const long long m = need(p.m, "m", 1, 24);
      const long long k = need(p.k, "k", 0, m);
      info.exists = true;
      info.condition = "0 <= k <= m";
      info.words = combinations::binomial(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
      info.construction = "Eades-McKay recursion";
      spec.metric = Metric::StrongMinimalChange;
      std::vector<Digit> first(static_cast<std::size_t>(m), 0);
      std::vector<Digit> last(static_cast<std::size_t>(m), 0);
      for (long long i = 0; i < k; ++i) {
        first[static_cast<std::size_t>(m - 1 - i)] = 1;
        last[static_cast<std::size_t>(i)] = 1;
      }
      spec.first = Word(2, first);
      spec.last = Word(2, last);
      break;
    }
    case Family::SubsetsAdjacent: {
      const long long m = need(p.m, "m", 4, 64);
      info.exists = m % 2 == 0;
      info.condition = info.exists ? "m even" : "m odd: no adjacent interchange 3-subset code";
      info.words = combinations::binomial(static_cast<std::size_t>(m), 3);
      info.construction = "recursion on m - 2 with the two new elements added first";
      spec.metric = Metric::AdjacentTransposition;
      std::vector<Digit> first(static_cast<std::size_t>(m), 0);
      std::vector<Digit> last(static_cast<std::size_t>(m), 0);
      for (std::size_t i = 0; i < 3; ++i) {
        first[static_cast<std::size_t>(m) - 1 - i] = 1;
        last[i] = 1;
      }
      spec.first = Word(2, first);
      spec.last = Word(2, last);
      break;
    }
    case Family::PermReverse: {
      const long long n = need(p.n, "n", 1, 20);
      info.exists = n <= 4 || n % 4 == 0 || n % 4 == 1;
      info.condition = info.exists ? "n <= 4 or n = 0, 1 (mod 4)"
                                   : "does not exist: n ≡ " + std::to_string(n % 4) + " (mod 4)";
      info.words = permutations::factorial(static_cast<std::size_t>(n));
      info.cyclic = n >= 2;
      info.construction = n <= 4 ? "plain changes"
                          : n % 4 == 0 ? "three-code interleaving finished along a Hamilton path"
                                       : "insertion sweep over the order n - 1 code";
      spec.metric = Metric::AdjacentTransposition;
      spec.require_cyclic = n >= 2;
      spec.first = permutations::identity(static_cast<std::size_t>(n));
      pair(PairingRule::Reversal, "reversal", {static_cast<std::int64_t>(n >= 2 ? info.words / 2 : 0)});
      break;
    }
    case Family::PermSjt: {
      const long long n = need(p.n, "n", 1, 20);
      info.exists = true;
      info.condition = "any n >= 1";
      info.words = permutations::factorial(static_cast<std::size_t>(n));
      info.cyclic = n >= 2;
      info.construction = "plain changes";
      spec.metric = Metric::AdjacentTransposition;
      spec.require_cyclic = n >= 2;
      spec.first = permutations::identity(static_cast<std::size_t>(n));
      break;
    }
    case Family::MultisetCycle: {
      const long long n = need(p.n, "n", 3, 255);
      info.exists = n % 2 == 1;
      info.condition = info.exists ? "n odd" : "n even: not handled";
      info.words = static_cast<std::uint64_t>(n * (n - 1));
      info.cyclic = true;
      info.construction = "recursive splice of the n - 2 cycle";
      spec.metric = Metric::AdjacentTransposition;
      spec.require_cyclic = true;
      break;
    }
  }
  return s;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& n : kNames) {
    if (n.family == f) return n.name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& n : kNames) v.push_back(n.family);
    return v;
  }();
  return all;
}

std::string FamilyInfo::summary() const {
  if (!exists) return condition;
  std::string s = std::to_string(words) + " words, " + (cyclic ? "cyclic" : "not cyclic");
  if (!pairing.empty()) s += ", " + pairing;
  return s;
}

FamilyInfo family_info(Family f, const FamilyParams& p) { return shape(f, p).info; }

Code generate(Family f, const FamilyParams& p) {
  const FamilyInfo info = family_info(f, p);
  if (!info.exists) throw NonexistenceError(info.condition);
  const auto n = static_cast<std::size_t>(p.n.value_or(0));
  switch (f) {
    case Family::BinaryComplementary: return binary::complementary_even(n);
    case Family::BinaryOddMissingTwo: return binary::odd_missing_two(n);
    case Family::BinaryOddAll: return binary::odd_all_words(n);
    case Family::QaryLee: return qary::quasi_complementary_lee(*p.q, n);
    case Family::QaryLeeMissing:
      return qary::quasi_complementary_lee_missing(*p.q, n, missing_anchor(*p.q, *p.n, p)).code;
    case Family::QaryLeeBounded: return qary::lee_separation_bounded(*p.q, n);
    case Family::QaryHamming: return qary::quasi_complementary_hamming(*p.q, n);
    case Family::SubsetsComplementary: return combinations::complementary_subsets(n);
    case Family::SubsetsSmc:
      return combinations::eades_mckay(static_cast<std::size_t>(*p.k), static_cast<std::size_t>(*p.m));
    case Family::SubsetsAdjacent:
      return combinations::adjacent_transposition_combinations(static_cast<std::size_t>(*p.m));
    case Family::PermReverse: return permutations::reverse_perm_code(n);
    case Family::PermSjt: return permutations::sjt(n);
    case Family::MultisetCycle: return permutations::multiset_cycle(n);
  }
  throw InvalidArgument("unknown family");
}

CodeSpec declared_spec(Family f, const FamilyParams& p) {
  Shape s = shape(f, p);
  if (!s.info.exists) throw NonexistenceError(s.info.condition);
  const auto n = static_cast<std::size_t>(p.n.value_or(0));
  switch (f) {
    case Family::BinaryComplementary:
    case Family::BinaryOddAll:
      s.spec.universe = Universe::all(2, n);
      break;
    case Family::BinaryOddMissingTwo:
      s.spec.universe =
          Universe::all_except(2, n, {Word::constant(2, n, 0), Word::constant(2, n, 1)});
      break;
    case Family::QaryLee:
    case Family::QaryLeeBounded:
    case Family::QaryHamming:
      s.spec.universe = Universe::all(*p.q, n);
      break;
    case Family::QaryLeeMissing: {
      const Word anchor = missing_anchor(*p.q, *p.n, p);
      std::vector<Word> gone;
      for (int i = 0; i < *p.q; ++i) gone.push_back(add_diagonal(anchor, i));
      s.spec.universe = Universe::all_except(*p.q, n, gone);
      break;
    }
    case Family::SubsetsComplementary:
      s.spec.universe = Universe::fixed_weight(2 * n, n);
      break;
    case Family::SubsetsSmc:
      s.spec.universe = Universe::fixed_weight(static_cast<std::size_t>(*p.m),
                                               static_cast<std::size_t>(*p.k));
      break;
    case Family::SubsetsAdjacent:
      s.spec.universe = Universe::fixed_weight(static_cast<std::size_t>(*p.m), 3);
      break;
    case Family::PermReverse:
    case Family::PermSjt:
      s.spec.universe = Universe::permutations(n);
      break;
    case Family::MultisetCycle: {
      std::vector<Digit> ms(n, 3);
      ms[0] = 1;
      ms[1] = 2;
      s.spec.universe = Universe::arrangements(4, ms);
      break;
    }
  }
  return s.spec;
}

bool prefers_spaced_output(Family f) {
  return f == Family::PermReverse || f == Family::PermSjt || f == Family::MultisetCycle;
}

}  // namespace graycode
