#include "graycode/permutations.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "graycode/combinations.hpp"
#include "graycode/error.hpp"

namespace graycode::permutations {

namespace {

// Largest n whose full code is materialised; larger orders must stream.
constexpr std::size_t kMaxMaterialised = 10;

void check_order(std::size_t n, std::size_t max) {
  if (n < 1 || n > max) {
    throw InvalidArgument("permutation order " + std::to_string(n) + " outside [1, " +
                          std::to_string(max) + "]");
  }
}

int radix_for(std::size_t n) { return static_cast<int>(n) + 1; }

// Inserts `symbol` into `base` so that it lands at 0-based position `pos`.
void insert_at(WordView base, Digit symbol, std::size_t pos, std::vector<Digit>& out) {
  out.resize(base.size() + 1);
  std::copy(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(pos), out.begin());
  out[pos] = symbol;
  std::copy(base.begin() + static_cast<std::ptrdiff_t>(pos), base.end(),
            out.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
}

// Plain-changes sweep of `symbol` through one word: right to left when
// `leftward`, left to right otherwise.
void sweep(WordView base, Digit symbol, bool leftward, const Sink& sink, std::vector<Digit>& buf) {
  const std::size_t len = base.size() + 1;
  for (std::size_t k = 0; k < len; ++k) {
    insert_at(base, symbol, leftward ? len - 1 - k : k, buf);
    sink(buf);
  }
}

void stream_sjt(std::size_t n, const Sink& sink) {
  if (n == 1) {
    const Digit one = 1;
    sink(WordView(&one, 1));
    return;
  }
  std::size_t j = 0;
  std::vector<Digit> buf;
  stream_sjt(n - 1, [&](WordView w) { sweep(w, static_cast<Digit>(n), j++ % 2 == 0, sink, buf); });
}

std::vector<Digit> property_p_digits(std::size_t n, std::size_t slot) {
  std::vector<Digit> base;
  for (std::size_t s = n - 1; s >= 3; --s) base.push_back(static_cast<Digit>(s));
  base.push_back(1);
  base.push_back(2);
  std::vector<Digit> out;
  insert_at(base, static_cast<Digit>(n), slot, out);
  return out;
}

void stream_first_half(std::size_t n, const Sink& sink);

void stream_thm_1mod4(std::size_t n, const Sink& sink) {
  const std::uint64_t h = factorial(n - 1) / 2;
  const Digit big = static_cast<Digit>(n);
  std::vector<Digit> buf;
  std::uint64_t j = 0;
  // G words 0 .. h - 4: the last of these is the first property-P word.
  stream_first_half(n - 1, [&](WordView w) {
    if (j + 4 <= h) sweep(w, big, j % 2 == 0, sink, buf);
    ++j;
  });
  const auto p2 = property_p_digits(n - 1, 2);
  const auto p3 = property_p_digits(n - 1, 1);
  const auto p4 = property_p_digits(n - 1, 0);
  auto row = [&](const std::vector<Digit>& p, std::size_t pos1) {
    insert_at(p, big, pos1 - 1, buf);
    sink(buf);
  };
  row(p2, 1);
  row(p3, 1);
  row(p3, 2);
  row(p2, 2);
  for (std::size_t k = 3; k <= n; ++k) row(p2, k);
  row(p3, n);
  row(p4, n);
  for (std::size_t p = n - 1; p >= 3; --p) {
    if ((n - 1 - p) % 2 == 0) {
      row(p4, p);
      row(p3, p);
    } else {
      row(p3, p);
      row(p4, p);
    }
  }
  row(p4, 2);
  row(p4, 1);
}

void stream_thm_0mod4(std::size_t n, const Sink& sink) {
  const std::size_t small = n - 3;
  Code g1(radix_for(small), small);
  stream_first_half(small, [&](WordView w) { g1.push_back_unchecked(w); });
  const std::size_t h1 = g1.size();

  std::vector<std::array<std::size_t, 3>> places;
  const Code g2 = combinations::adjacent_transposition_combinations(n);
  for (std::size_t i = 0; i < g2.size(); ++i) {
    std::array<std::size_t, 3> t{};
    std::size_t k = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (g2[i][p]) t[k++] = p;
    }
    places.push_back(t);
  }

  const Digit a = static_cast<Digit>(n - 2);
  const Digit b = static_cast<Digit>(n - 1);
  const Digit c = static_cast<Digit>(n);
  const std::array<std::array<Digit, 3>, 6> g3{{
      {a, b, c}, {b, a, c}, {b, c, a}, {c, b, a}, {c, a, b}, {a, c, b}}};

  std::vector<Digit> buf(n);
  auto compose = [&](WordView rest, const std::array<std::size_t, 3>& where,
                     const std::array<Digit, 3>& order) {
    std::size_t r = 0;
    std::size_t t = 0;
    for (std::size_t p = 0; p < n; ++p) {
      buf[p] = (t < 3 && where[t] == p) ? order[t++] : rest[r++];
    }
    sink(buf);
  };

  // Phase 1: per G1 word, six passes of G2 joined by five G3 steps.
  std::size_t last_order = 0;
  for (std::size_t k = 0; k + 1 < h1; ++k) {
    for (std::size_t pass = 0; pass < 6; ++pass) {
      const std::size_t o = k % 2 == 0 ? pass : 5 - pass;
      last_order = o;
      if (pass % 2 == 0) {
        for (std::size_t i = 0; i < places.size(); ++i) compose(g1[k], places[i], g3[o]);
      } else {
        for (std::size_t i = places.size(); i-- > 0;) compose(g1[k], places[i], g3[o]);
      }
    }
  }
  const WordView rest = g1[h1 - 1];
  compose(rest, places[0], g3[last_order]);

  // Phase 2: plain changes of n - 2, n, n - 1 (slowest to fastest) over the
  // last G1 word, until n - 2 sits in slot 1.
  std::array<std::size_t, 3> slot{n - 3, n - 2, n - 1};
  const std::array<std::size_t, 3> size{n - 2, n - 1, n};
  std::array<int, 3> dir{-1, -1, -1};
  const std::array<Digit, 3> symbol{a, c, b};
  std::vector<Digit> s1;
  std::vector<Digit> s2;
  const std::array<std::size_t, 3> stop{1, n - 2, n - 1};
  while (slot != stop) {
    std::size_t j = 3;
    while (j > 0) {
      const auto next = static_cast<std::ptrdiff_t>(slot[j - 1]) + dir[j - 1];
      if (next >= 0 && next < static_cast<std::ptrdiff_t>(size[j - 1])) break;
      --j;
    }
    if (j == 0) throw Error("phase 2 exhausted before reaching its stop word");
    --j;
    slot[j] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(slot[j]) + dir[j]);
    for (std::size_t t = j + 1; t < 3; ++t) dir[t] = -dir[t];
    insert_at(rest, symbol[0], slot[0], s1);
    insert_at(s1, symbol[1], slot[1], s2);
    insert_at(s2, symbol[2], slot[2], buf);
    sink(buf);
  }

  // Phase 3: the Hamilton path on the (y, z, b) graph.
  const auto path = gamma_path(static_cast<int>(n));
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Word w = gamma_vertex_to_permutation(path[i], static_cast<int>(n));
    sink(w.digits());
  }
}

void stream_first_half(std::size_t n, const Sink& sink) {
  if (n <= 4) {
    const std::uint64_t half = n == 1 ? 1 : factorial(n) / 2;
    std::uint64_t i = 0;
    stream_sjt(n, [&](WordView w) {
      if (i++ < half) sink(w);
    });
    return;
  }
  if (n % 4 == 0) return stream_thm_0mod4(n, sink);
  if (n % 4 == 1) return stream_thm_1mod4(n, sink);
  throw NonexistenceError("no reverse adjacent-interchange code exists for n = " +
                          std::to_string(n) + " (n = 2, 3 mod 4)");
}

Code with_reversals(Code half) {
  const std::size_t h = half.size();
  std::vector<Digit> buf(half.length());
  for (std::size_t i = 0; i < h; ++i) {
    std::reverse_copy(half[i].begin(), half[i].end(), buf.begin());
    half.push_back_unchecked(buf);
  }
  half.set_cyclic(true);
  return half;
}

Code collect_first_half(std::size_t n) {
  Code c(radix_for(n), n);
  c.reserve(n == 1 ? 1 : factorial(n) / 2);
  stream_first_half(n, [&](WordView w) { c.push_back_unchecked(w); });
  return c;
}

bool valid_vertex(const GammaVertex& v, int n) {
  return v.y >= 1 && v.y <= n && v.z >= 1 && v.z <= n && v.y != v.z && (v.b == 0 || v.b == 1);
}

void check_gamma_order(int n) {
  if (n < 2 || n % 2 != 0 || n > 200) {
    throw InvalidArgument("the (y, z, b) graph is defined for even n in [2, 200]");
  }
}

std::vector<GammaVertex> shifted(const std::vector<GammaVertex>& path, int by) {
  std::vector<GammaVertex> out;
  out.reserve(path.size());
  for (auto v : path) out.push_back({v.y + by, v.z + by, v.b});
  return out;
}

// Shared tail of the n >= 6 listing, from (3, n, 1) to (2, 1, 0).
void gamma_common_tail(int n, std::vector<GammaVertex>& p) {
  for (int y = 3; y <= n - 2; ++y) p.push_back({y, n, 1});
  for (int y = n - 2; y >= 3; --y) p.push_back({y, n - 1, 1});
  for (int y = 3; y <= n - 2; ++y) p.push_back({y, n - 1, 0});
  for (int y = n - 2; y >= 2; --y) p.push_back({y, n, 0});
  for (int z = n - 1; z >= 3; --z) p.push_back({2, z, 0});
  p.push_back({3, 2, 0});
  for (int y = 3; y <= n; ++y) p.push_back({y, 1, 0});
  for (int y = n; y >= 2; --y) p.push_back({y, 1, 1});
  for (int z = 2; z <= n; ++z) p.push_back({1, z, 1});
  for (int z = n; z >= 2; --z) p.push_back({1, z, 0});
  p.push_back({2, 1, 0});
}

std::vector<std::pair<int, int>> multiset_positions(std::size_t n) {
  if (n == 3) return {{1, 3}, {2, 3}, {3, 2}, {3, 1}, {2, 1}, {1, 2}};
  const int m = static_cast<int>(n);
  std::vector<std::pair<int, int>> out{{1, 3}};
  auto inner = multiset_positions(n - 2);
  for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
    out.emplace_back(it->first + 1, it->second + 1);
  }
  for (int z = 4; z <= m; ++z) out.emplace_back(1, z);
  for (int y = 2; y <= m - 1; ++y) out.emplace_back(y, m);
  for (int z = m - 1; z >= 1; --z) out.emplace_back(m, z);
  for (int y = m - 1; y >= 2; --y) out.emplace_back(y, 1);
  out.emplace_back(1, 2);
  return out;
}

// Position-encoding rank of a permutation with 1 before 2: symbols n, n-1, .., 3
// each pick one of the positions still free, mixed radix n, n-1, .., 3.
struct RankState {
  std::size_t n;
  std::vector<std::uint64_t> weight;  // by symbol
  std::vector<std::uint64_t> digit;   // smaller symbols before this one

  explicit RankState(std::size_t order) : n(order), weight(order + 1, 0), digit(order + 1, 0) {
    std::uint64_t w = 1;
    for (std::size_t s = 3; s <= n; ++s) {
      weight[s] = w;
      w *= s;
    }
  }

  std::uint64_t full(WordView p) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::uint64_t d = 0;
      for (std::size_t j = 0; j < i; ++j) d += p[j] < p[i];
      digit[p[i]] = d;
      if (p[i] >= 3) r += d * weight[p[i]];
    }
    return r;
  }
};

}  // namespace

Word identity(std::size_t n) {
  check_order(n, static_cast<std::size_t>(kMaxRadix) - 1);
  std::vector<Digit> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<Digit>(i + 1);
  return Word(radix_for(n), std::move(d));
}

bool is_permutation(WordView w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (Digit d : w) {
    if (d < 1 || d > w.size() || seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw InvalidArgument("factorial overflows 64 bits");
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Code sjt(std::size_t n) {
  check_order(n, kMaxMaterialised);
  Code c(radix_for(n), n, n >= 2);
  c.reserve(factorial(n));
  stream_sjt(n, [&](WordView w) { c.push_back_unchecked(w); });
  return c;
}

Report verify_reverse_code(const Code& c) {
  const std::size_t n = c.length();
  if (c.radix() != radix_for(n)) {
    throw InvalidArgument("permutation codes use radix n + 1");
  }
  CodeSpec spec;
  spec.metric = Metric::AdjacentTransposition;
  spec.require_cyclic = true;
  spec.universe = Universe::permutations(n);
  spec.first = identity(n);
  Pairing p;
  p.rule = PairingRule::Reversal;
  p.separations = {static_cast<std::int64_t>(factorial(n) / 2)};
  if (n == 1) p.separations = {0};
  spec.pairing = p;
  return verify_code(c, spec);
}

std::vector<Word> property_p_words(std::size_t n) {
  check_order(n, static_cast<std::size_t>(kMaxRadix) - 1);
  if (n < 4) throw InvalidArgument("property P needs n >= 4");
  std::vector<Word> out;
  for (std::size_t slot = 4; slot-- > 0;) out.emplace_back(radix_for(n), property_p_digits(n, slot));
  return out;
}

bool property_p_check(const Code& c) {
  if (!verify_reverse_code(c).pass) {
    throw InvalidArgument("property P is only defined for reverse codes");
  }
  const std::size_t n = c.length();
  if (n < 4) return false;
  const std::size_t mid = c.size() / 2;
  const auto words = property_p_words(n);
  for (std::size_t i = 0; i < 4; ++i) {
    if (c.word(mid - 4 + i) != words[i]) return false;
  }
  return true;
}

GammaGraph::GammaGraph(int n) : n_(n) { check_gamma_order(n); }

bool GammaGraph::contains(const GammaVertex& v) const { return valid_vertex(v, n_); }

bool GammaGraph::has_edge(const GammaVertex& u, const GammaVertex& v) const {
  if (!contains(u) || !contains(v) || u == v) return false;
  if (u.y == v.y && u.z == v.z) {
    const int y = u.y;
    const int z = u.z;
    const bool pair12 = (y == 1 && z == 2) || (y == 2 && z == 1);
    const bool pair13 = (y == 1 && z == 3) || (y == 3 && z == 1);
    return (y != 2 && z != 2 && !pair13) || pair12;
  }
  if (u.b != v.b) return false;
  if (u.z == v.z && std::abs(u.y - v.y) == 1) return true;
  if (u.y == v.y && std::abs(u.z - v.z) == 1) return true;
  return u.y == v.z && u.z == v.y && std::abs(u.y - u.z) == 1;
}

std::vector<GammaVertex> GammaGraph::vertices() const {
  std::vector<GammaVertex> out;
  for (int y = 1; y <= n_; ++y) {
    for (int z = 1; z <= n_; ++z) {
      if (y == z) continue;
      out.push_back({y, z, 0});
      out.push_back({y, z, 1});
    }
  }
  return out;
}

std::vector<GammaVertex> GammaGraph::neighbors(const GammaVertex& v) const {
  std::vector<GammaVertex> cand{{v.y, v.z, 1 - v.b},     {v.y - 1, v.z, v.b}, {v.y + 1, v.z, v.b},
                                {v.y, v.z - 1, v.b},     {v.y, v.z + 1, v.b}, {v.z, v.y, v.b}};
  std::vector<GammaVertex> out;
  for (const auto& u : cand) {
    if (has_edge(v, u) && std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

GammaGraph gamma_graph(int n) { return GammaGraph(n); }

std::vector<GammaVertex> gamma_path(int n) {
  check_gamma_order(n);
  if (n == 2) return {{2, 1, 1}, {1, 2, 1}, {1, 2, 0}, {2, 1, 0}};
  if (n == 4) {
    return {{4, 3, 1}, {4, 3, 0}, {4, 2, 0}, {4, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 3, 0}, {3, 2, 0},
            {3, 1, 0}, {4, 1, 0}, {4, 1, 1}, {3, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1},
            {2, 4, 1}, {3, 4, 1}, {3, 4, 0}, {2, 4, 0}, {1, 4, 0}, {1, 3, 0}, {1, 2, 0}, {2, 1, 0}};
  }
  std::vector<GammaVertex> p;
  if (n == 6) {
    p = {{6, 5, 1}, {5, 6, 1}, {5, 6, 0}, {6, 5, 0}, {6, 4, 0}, {6, 4, 1},
         {5, 4, 1}, {5, 4, 0}, {5, 3, 0}, {5, 3, 1}, {4, 3, 1}};
  } else {
    p = {{n, n - 1, 1},     {n - 1, n, 1},     {n - 1, n, 0},     {n, n - 1, 0},
         {n, n - 2, 0},     {n - 1, n - 2, 0}, {n - 1, n - 3, 0}, {n, n - 3, 0},
         {n, n - 3, 1},     {n, n - 2, 1},     {n - 1, n - 2, 1}, {n - 1, n - 3, 1},
         {n - 2, n - 3, 1}};
  }
  const auto inner = shifted(gamma_path(n - 4), 2);
  p.insert(p.end(), inner.begin() + 1, inner.end());
  if (n == 6) {
    p.insert(p.end(), {{4, 2, 0}, {5, 2, 0}, {6, 2, 0}, {6, 3, 0}, {6, 3, 1}, {6, 2, 1},
                       {5, 2, 1}, {4, 2, 1}, {3, 2, 1}});
  } else {
    p.push_back({4, 2, 0});
    for (int y = 5; y <= n; ++y) p.push_back({y, 2, 0});
    for (int z = 3; z <= n - 4; ++z) p.push_back({n, z, 0});
    for (int z = n - 4; z >= 3; --z) p.push_back({n - 1, z, 0});
    for (int z = 3; z <= n - 4; ++z) p.push_back({n - 1, z, 1});
    for (int z = n - 4; z >= 2; --z) p.push_back({n, z, 1});
    for (int y = n - 1; y >= 3; --y) p.push_back({y, 2, 1});
  }
  for (int z = 3; z <= n; ++z) p.push_back({2, z, 1});
  gamma_common_tail(n, p);
  return p;
}

Word gamma_vertex_to_permutation(const GammaVertex& v, int n) {
  if (n < 4 || n > kMaxRadix - 1 || !valid_vertex(v, n)) {
    throw InvalidArgument("invalid vertex (" + std::to_string(v.y) + ", " + std::to_string(v.z) +
                          ", " + std::to_string(v.b) + ") for n = " + std::to_string(n));
  }
  std::vector<Digit> w(static_cast<std::size_t>(n), 0);
  w[static_cast<std::size_t>(v.y - 1)] = static_cast<Digit>(n - 1);
  w[static_cast<std::size_t>(v.z - 1)] = static_cast<Digit>(n);
  std::vector<Digit> rest;
  rest.push_back(static_cast<Digit>(v.b == 0 ? n - 2 : n - 3));
  rest.push_back(static_cast<Digit>(v.b == 0 ? n - 3 : n - 2));
  for (int s = n - 4; s >= 3; --s) rest.push_back(static_cast<Digit>(s));
  for (Digit s : {Digit{1}, Digit{2}}) {
    if (s <= n - 4) rest.push_back(s);
  }
  std::size_t r = 0;
  for (auto& d : w) {
    if (d == 0) d = rest[r++];
  }
  return Word(n + 1, std::move(w));
}

Code thm_0mod4(std::size_t n) {
  if (n < 8 || n % 4 != 0) throw InvalidArgument("thm_0mod4 needs n = 0 (mod 4), n >= 8");
  check_order(n, kMaxMaterialised);
  return with_reversals(collect_first_half(n));
}

Code thm_1mod4(std::size_t n) {
  if (n < 5 || n % 4 != 1) throw InvalidArgument("thm_1mod4 needs n = 1 (mod 4), n >= 5");
  check_order(n, kMaxMaterialised);
  return with_reversals(collect_first_half(n));
}

Code reverse_perm_code(std::size_t n) {
  check_order(n, kMaxMaterialised);
  if (n <= 4) {
    Code c = sjt(n);
    c.set_cyclic(true);
    return c;
  }
  return with_reversals(collect_first_half(n));
}

void stream_reverse_first_half(std::size_t n, const Sink& sink) {
  check_order(n, 20);
  stream_first_half(n, sink);
}

Report verify_reverse_stream(std::size_t n) {
  check_order(n, 13);
  Report r;
  const std::uint64_t half = n == 1 ? 1 : factorial(n) / 2;
  std::vector<bool> seen(half, false);
  RankState rank(n);
  std::vector<Digit> prev;
  std::uint64_t count = 0;
  std::uint64_t current = 0;
  const Word id = identity(n);

  stream_first_half(n, [&](WordView w) {
    const std::size_t i = static_cast<std::size_t>(count);
    if (count == 0) {
      if (!std::equal(w.begin(), w.end(), id.begin())) {
        r.add({"first", 0, std::nullopt, "code does not start at " + id.to_string()});
      }
      if (!is_permutation(w)) {
        r.add({"unexpected", 0, std::nullopt, "not a permutation: " + to_string(w, radix_for(n))});
        prev.assign(w.begin(), w.end());
        ++count;
        return;
      }
      current = rank.full(w);
    } else {
      std::size_t p = 0;
      while (p < n && w[p] == prev[p]) ++p;
      const bool swap = p + 1 < n && w[p] == prev[p + 1] && w[p + 1] == prev[p] &&
                        std::equal(w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end(),
                                   prev.begin() + static_cast<std::ptrdiff_t>(p) + 2);
      if (!swap) {
        r.add({"step", i - 1, i,
               to_string(WordView(prev), radix_for(n)) + " -> " + to_string(w, radix_for(n)) +
                   " is not an adjacent transposition"});
        if (!is_permutation(w)) {
          r.add({"unexpected", i, std::nullopt, "not a permutation"});
          prev.assign(w.begin(), w.end());
          ++count;
          return;
        }
        current = rank.full(w);
      } else {
        // prev had x at p and y at p + 1; now y precedes x.
        const Digit x = prev[p];
        const Digit y = prev[p + 1];
        if (x < y) {
          --rank.digit[y];
          if (y >= 3) current -= rank.weight[y];
        } else {
          ++rank.digit[x];
          if (x >= 3) current += rank.weight[x];
        }
      }
    }
    const auto pos1 = std::find(w.begin(), w.end(), Digit{1});
    const auto pos2 = std::find(w.begin(), w.end(), Digit{2});
    if (n >= 2 && pos2 < pos1) {
      r.add({"unexpected", i, std::nullopt,
             "2 precedes 1 in the first half: " + to_string(w, radix_for(n))});
    } else if (current >= half) {
      r.add({"unexpected", i, std::nullopt, "rank out of range"});
    } else if (seen[current]) {
      r.add({"duplicate", i, std::nullopt, "repeated word " + to_string(w, radix_for(n))});
    } else {
      seen[current] = true;
    }
    prev.assign(w.begin(), w.end());
    ++count;
  });

  if (count != half) {
    r.add({"missing", std::nullopt, std::nullopt,
           "first half has " + std::to_string(count) + " words, expected " + std::to_string(half)});
  }
  if (n >= 2 && !prev.empty()) {
    // The midpoint seam: the last first-half word must be one swap from n...21.
    std::vector<Digit> rev(id.begin(), id.end());
    std::reverse(rev.begin(), rev.end());
    std::size_t diff = 0;
    for (std::size_t p = 0; p < n; ++p) diff += rev[p] != prev[p];
    std::size_t p = 0;
    while (p < n && rev[p] == prev[p]) ++p;
    const bool adjacent = diff == 2 && p + 1 < n && rev[p] == prev[p + 1] && rev[p + 1] == prev[p];
    if (!adjacent) {
      r.add({"step", count ? static_cast<std::size_t>(count - 1) : 0, std::nullopt,
             "last first-half word " + to_string(WordView(prev), radix_for(n)) +
                 " is not adjacent to the reversal of the first word"});
    }
  }
  return r;
}

Code multiset_cycle(std::size_t n) {
  if (n < 3 || n % 2 == 0 || n > 255) throw InvalidArgument("multiset_cycle needs odd n >= 3");
  Code c(4, n, true);
  std::vector<Digit> buf(n);
  for (auto [y, z] : multiset_positions(n)) {
    std::fill(buf.begin(), buf.end(), Digit{3});
    buf[static_cast<std::size_t>(y - 1)] = 1;
    buf[static_cast<std::size_t>(z - 1)] = 2;
    c.push_back_unchecked(buf);
  }
  return c;
}

std::vector<std::pair<int, int>> multiset_cycle_positions(std::size_t n) {
  if (n < 3 || n % 2 == 0 || n > 255) throw InvalidArgument("multiset_cycle needs odd n >= 3");
  return multiset_positions(n);
}

}  // namespace graycode::permutations
