#include "graycode/verify.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include "graycode/error.hpp"
#include "graycode/transform.hpp"

namespace graycode {

namespace {

bool view_less(WordView a, WordView b) {
  return std::memcmp(a.data(), b.data(), a.size()) < 0;
}

bool view_equal(WordView a, WordView b) {
  return std::memcmp(a.data(), b.data(), a.size()) == 0;
}

std::vector<std::size_t> sorted_indices(const Code& c) {
  std::vector<std::size_t> idx(c.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return view_less(c[a], c[b]); });
  return idx;
}

Code sorted_copy(const Code& c) {
  bool sorted = true;
  for (std::size_t i = 1; i < c.size() && sorted; ++i) sorted = !view_less(c[i], c[i - 1]);
  if (sorted) return c;
  Code out(c.radix(), c.length(), false);
  out.reserve(c.size());
  for (std::size_t i : sorted_indices(c)) out.push_back_unchecked(c[i]);
  return out;
}

// Changed positions between two binary words, or nullopt when not exactly two
// opposite-valued positions change.
std::optional<std::pair<std::size_t, std::size_t>> swapped_pair(WordView a, WordView b) {
  std::size_t first = a.size();
  std::size_t second = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (first == a.size()) {
      first = i;
    } else if (second == a.size()) {
      second = i;
    } else {
      return std::nullopt;
    }
  }
  if (second == a.size() || a[first] == a[second]) return std::nullopt;
  return std::make_pair(first, second);
}

void check_spec(const Code& c, const CodeSpec& spec) {
  if ((spec.metric == Metric::StrongMinimalChange || spec.metric == Metric::ComplementarySMC) &&
      c.radix() != 2) {
    throw InvalidArgument(std::string(to_string(spec.metric)) + " metric requires radix 2");
  }
  if (spec.universe) {
    const Code& u = spec.universe->words();
    if (u.radix() != c.radix() || u.length() != c.length()) {
      throw InvalidArgument("universe does not match the code's radix and length");
    }
  }
  if (spec.pairing && spec.pairing->rule == PairingRule::Complement && c.radix() != 2) {
    throw InvalidArgument("complement pairing requires radix 2");
  }
  for (const auto* w : {&spec.first, &spec.last}) {
    if (*w && ((*w)->radix() != c.radix() || (*w)->length() != c.length())) {
      throw InvalidArgument("endpoint word does not match the code's radix and length");
    }
  }
}

std::int64_t separation(std::size_t i, std::size_t j, std::size_t n, bool cyclic) {
  const auto a = static_cast<std::int64_t>(i);
  const auto b = static_cast<std::int64_t>(j);
  if (cyclic) return ((b - a) % static_cast<std::int64_t>(n) + static_cast<std::int64_t>(n)) %
                     static_cast<std::int64_t>(n);
  return b > a ? b - a : a - b;
}

struct Lookup {
  const Code& c;
  std::vector<std::size_t> order;

  explicit Lookup(const Code& code) : c(code), order(sorted_indices(code)) {}

  std::optional<std::size_t> find(WordView w) const {
    auto it = std::lower_bound(order.begin(), order.end(), w,
                               [&](std::size_t i, WordView x) { return view_less(c[i], x); });
    if (it == order.end() || !view_equal(c[*it], w)) return std::nullopt;
    return *it;
  }
};

void paired_into(const Pairing& p, WordView w, int radix, std::vector<Digit>& out) {
  out.assign(w.begin(), w.end());
  switch (p.rule) {
    case PairingRule::Complement:
      for (auto& d : out) d = static_cast<Digit>(1 - d);
      break;
    case PairingRule::AddDiagonal:
      for (auto& d : out) d = static_cast<Digit>(((d + p.shift) % radix + radix) % radix);
      break;
    case PairingRule::Reversal:
      std::reverse(out.begin(), out.end());
      break;
  }
}

SeparationProfile profile_impl(const Code& c, const Pairing& p, bool cyclic, const Lookup& lookup,
                               Report* report) {
  SeparationProfile profile;
  std::vector<Digit> buf;
  for (std::size_t i = 0; i < c.size(); ++i) {
    paired_into(p, c[i], c.radix(), buf);
    auto j = lookup.find(buf);
    if (!j) {
      if (!report) {
        throw InvalidArgument("paired word " + to_string(WordView(buf), c.radix()) + " of " +
                              to_string(c[i], c.radix()) + " is absent");
      }
      report->add({"pair-absent", i, std::nullopt,
                   "word " + to_string(c[i], c.radix()) + " pairs with " +
                       to_string(WordView(buf), c.radix()) + ", which is absent"});
      continue;
    }
    const std::int64_t s = separation(i, *j, c.size(), cyclic);
    ++profile[s];
    if (report && !p.separations.contains(s)) {
      report->add({"separation", i, *j,
                   "word " + to_string(c[i], c.radix()) + " pairs with " +
                       to_string(WordView(buf), c.radix()) + " at separation " +
                       std::to_string(s)});
    }
  }
  return profile;
}

}  // namespace

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::Hamming: return "hamming";
    case Metric::Lee: return "lee";
    case Metric::AdjacentTransposition: return "transposition";
    case Metric::StrongMinimalChange: return "smc";
    case Metric::ComplementarySMC: return "csmc";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
  for (Metric m : {Metric::Hamming, Metric::Lee, Metric::AdjacentTransposition,
                   Metric::StrongMinimalChange, Metric::ComplementarySMC}) {
    if (name == to_string(m)) return m;
  }
  if (name == "adjacent-transposition") return Metric::AdjacentTransposition;
  return std::nullopt;
}

bool is_unit_step(Metric m, WordView a, WordView b, int radix) {
  switch (m) {
    case Metric::Hamming:
      return hamming_distance(a, b) == 1;
    case Metric::Lee:
      return lee_distance(a, b, radix) == 1;
    case Metric::AdjacentTransposition: {
      auto p = swapped_pair(a, b);
      if (!p || p->second != p->first + 1) return false;
      return a[p->first] == b[p->second] && a[p->second] == b[p->first];
    }
    case Metric::StrongMinimalChange:
    case Metric::ComplementarySMC: {
      auto p = swapped_pair(a, b);
      if (!p) return false;
      bool zeros = true;
      bool ones = true;
      for (std::size_t i = p->first + 1; i < p->second; ++i) {
        zeros = zeros && a[i] == 0;
        ones = ones && a[i] == 1;
      }
      return m == Metric::StrongMinimalChange ? zeros : (zeros || ones);
    }
  }
  return false;
}

Universe::Universe(Code words) : words_(sorted_copy(words)) { words_.set_cyclic(false); }

Universe Universe::all(int radix, std::size_t length) {
  Code c(radix, length);
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > (std::size_t{1} << 40) / static_cast<std::size_t>(radix)) {
      throw InvalidArgument("universe too large");
    }
    total *= static_cast<std::size_t>(radix);
  }
  c.reserve(total);
  std::vector<Digit> w(length, 0);
  for (std::size_t n = 0; n < total; ++n) {
    c.push_back_unchecked(w);
    for (std::size_t i = length; i-- > 0;) {
      if (++w[i] < radix) break;
      w[i] = 0;
    }
  }
  return Universe(std::move(c));
}

Universe Universe::all_except(int radix, std::size_t length, const std::vector<Word>& excluded) {
  Universe full = all(radix, length);
  std::vector<Word> ex = excluded;
  std::sort(ex.begin(), ex.end());
  Code c(radix, length);
  c.reserve(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    const Word w = full.words_.word(i);
    if (!std::binary_search(ex.begin(), ex.end(), w)) c.push_back_unchecked(w);
  }
  return Universe(std::move(c));
}

Universe Universe::fixed_weight(std::size_t m, std::size_t k) {
  if (k > m) throw InvalidArgument("weight exceeds length");
  std::vector<Digit> w(m, 0);
  std::fill(w.end() - static_cast<std::ptrdiff_t>(k), w.end(), Digit{1});
  Code c(2, m);
  do {
    c.push_back_unchecked(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return Universe(std::move(c));
}

Universe Universe::permutations(std::size_t n) {
  if (n < 1 || n + 1 > static_cast<std::size_t>(kMaxRadix)) {
    throw InvalidArgument("permutation size out of range");
  }
  std::vector<Digit> w(n);
  std::iota(w.begin(), w.end(), Digit{1});
  return arrangements(static_cast<int>(n) + 1, w);
}

Universe Universe::arrangements(int radix, std::vector<Digit> multiset) {
  if (multiset.empty()) throw InvalidArgument("empty multiset");
  std::sort(multiset.begin(), multiset.end());
  Code c(radix, multiset.size());
  do {
    c.push_back(WordView(multiset));
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  return Universe(std::move(c));
}

std::string_view to_string(PairingRule r) {
  switch (r) {
    case PairingRule::Complement: return "complement";
    case PairingRule::AddDiagonal: return "diagonal";
    case PairingRule::Reversal: return "reversal";
  }
  return "?";
}

std::optional<PairingRule> parse_pairing(std::string_view name) {
  for (PairingRule r : {PairingRule::Complement, PairingRule::AddDiagonal, PairingRule::Reversal}) {
    if (name == to_string(r)) return r;
  }
  if (name == "add-diagonal") return PairingRule::AddDiagonal;
  return std::nullopt;
}

Word paired_word(const Pairing& p, WordView w, int radix) {
  if (p.rule == PairingRule::Complement && radix != 2) {
    throw InvalidArgument("complement pairing requires radix 2");
  }
  std::vector<Digit> out;
  paired_into(p, w, radix, out);
  return Word(radix, std::move(out));
}

void Report::add(Violation v) {
  pass = false;
  if (violations.size() < kMaxStoredViolations) {
    violations.push_back(std::move(v));
  } else {
    ++suppressed;
  }
}

void Report::merge(const Report& other) {
  for (const auto& v : other.violations) add(v);
  suppressed += other.suppressed;
  if (!other.pass) pass = false;
  if (other.separation_profile) {
    if (!separation_profile) separation_profile.emplace();
    for (auto [s, n] : *other.separation_profile) (*separation_profile)[s] += n;
  }
}

Report verify_code(const Code& c, const CodeSpec& spec) {
  check_spec(c, spec);
  Report r;
  const std::size_t n = c.size();

  if (spec.require_step_one) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!is_unit_step(spec.metric, c[i], c[i + 1], c.radix())) {
        r.add({"step", i, i + 1,
               to_string(c[i], c.radix()) + " -> " + to_string(c[i + 1], c.radix()) +
                   " is not a unit " + std::string(to_string(spec.metric)) + " step"});
      }
    }
    if (spec.require_cyclic && n > 1 && !is_unit_step(spec.metric, c[n - 1], c[0], c.radix())) {
      r.add({"wrap", n - 1, 0,
             to_string(c[n - 1], c.radix()) + " -> " + to_string(c[0], c.radix()) +
                 " does not close the cycle"});
    }
  }

  if (spec.first && (n == 0 || !view_equal(c[0], *spec.first))) {
    r.add({"first", 0, std::nullopt,
           "expected first word " + spec.first->to_string() +
               (n ? ", found " + to_string(c[0], c.radix()) : std::string(", code is empty"))});
  }
  if (spec.last && (n == 0 || !view_equal(c[n - 1], *spec.last))) {
    r.add({"last", n ? n - 1 : 0, std::nullopt,
           "expected last word " + spec.last->to_string() +
               (n ? ", found " + to_string(c[n - 1], c.radix()) : std::string(", code is empty"))});
  }

  std::optional<Lookup> lookup;
  if (spec.universe || spec.pairing) lookup.emplace(c);

  if (spec.universe) {
    const Code& u = spec.universe->words();
    const auto& order = lookup->order;
    std::vector<Violation> found;
    std::vector<Violation> missing;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < order.size() || b < u.size()) {
      if (a < order.size() && a > 0 && view_equal(c[order[a]], c[order[a - 1]])) {
        // order is stable, so the first occurrence of a run has the smallest index
        std::size_t run = a - 1;
        while (run > 0 && view_equal(c[order[run - 1]], c[order[a]])) --run;
        found.push_back({"duplicate", order[run], order[a],
                         "word " + to_string(c[order[a]], c.radix())});
        ++a;
        continue;
      }
      if (b == u.size() || (a < order.size() && view_less(c[order[a]], u[b]))) {
        found.push_back({"unexpected", order[a], std::nullopt,
                         "word " + to_string(c[order[a]], c.radix()) + " is not in the universe"});
        ++a;
      } else if (a == order.size() || view_less(u[b], c[order[a]])) {
        missing.push_back({"missing", std::nullopt, std::nullopt,
                           "word " + to_string(u[b], c.radix()) + " never occurs"});
        ++b;
      } else {
        ++a;
        ++b;
      }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const Violation& x, const Violation& y) { return *x.index < *y.index; });
    for (auto& v : found) r.add(std::move(v));
    for (auto& v : missing) r.add(std::move(v));
  }

  if (spec.pairing) {
    r.separation_profile = profile_impl(c, *spec.pairing, spec.require_cyclic, *lookup, &r);
  }
  return r;
}

SeparationProfile separation_profile(const Code& c, const Pairing& p) {
  if (p.rule == PairingRule::Complement && c.radix() != 2) {
    throw InvalidArgument("complement pairing requires radix 2");
  }
  return profile_impl(c, p, c.cyclic(), Lookup(c), nullptr);
}

std::string describe(const SeparationProfile& p) {
  std::ostringstream os;
  bool first = true;
  for (auto [s, n] : p) {
    os << (first ? "" : ", ") << s << " x" << n;
    first = false;
  }
  return os.str();
}

std::string describe(const Report& r, std::size_t max_lines) {
  std::ostringstream os;
  if (r.pass) {
    os << "PASS\n";
  } else {
    os << "FAIL (" << r.violation_count() << " violation" << (r.violation_count() == 1 ? "" : "s")
       << ")\n";
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
      if (shown++ == max_lines) break;
      os << "  " << v.property << ": " << v.detail;
      if (v.index) {
        os << " [index " << *v.index;
        if (v.other_index) os << ", " << *v.other_index;
        os << "]";
      }
      os << "\n";
    }
    if (r.violation_count() > max_lines) {
      os << "  ... " << (r.violation_count() - std::min(max_lines, r.violations.size()))
         << " more\n";
    }
  }
  if (r.separation_profile) os << "separations: " << describe(*r.separation_profile) << "\n";
  return os.str();
}

}  // namespace graycode
