#include "graycode/binary.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "graycode/error.hpp"
#include "graycode/transform.hpp"
#include "graycode/verify.hpp"

namespace graycode::binary {

namespace {

constexpr std::size_t kMaxBits = 28;

using Bits = std::uint32_t;

void check_bits(std::size_t n, std::size_t min = 1) {
  if (n < min || n > kMaxBits) {
    throw InvalidArgument("bit length " + std::to_string(n) + " outside [" + std::to_string(min) +
                          ", " + std::to_string(kMaxBits) + "]");
  }
}

// Position 0 (leftmost) is the most significant bit.
Code to_code(const std::vector<Bits>& words, std::size_t n, bool cyclic) {
  Code c(2, n, cyclic);
  c.reserve(words.size());
  std::vector<Digit> buf(n);
  for (Bits w : words) {
    for (std::size_t p = 0; p < n; ++p) buf[p] = static_cast<Digit>((w >> (n - 1 - p)) & 1U);
    c.push_back_unchecked(buf);
  }
  return c;
}

std::vector<Bits> brgc_bits(std::size_t n) {
  std::vector<Bits> out(std::size_t{1} << n);
  for (Bits i = 0; i < out.size(); ++i) out[i] = i ^ (i >> 1);
  return out;
}

std::vector<Bits> ruskey_bits(std::size_t n) {
  std::vector<Bits> cur{0, 1};  // E(1)
  for (std::size_t m = 1; m < n; ++m) {
    const Bits mask = (Bits{1} << m) - 1;
    std::vector<Bits> brc = brgc_bits(m);
    for (auto& w : brc) w ^= mask;
    if (m % 2 == 0) std::reverse(brc.begin(), brc.end());  // E(m+1) uses BRRC(m)
    std::vector<Bits> next;
    next.reserve(cur.size() * 2);
    for (Bits w : cur) next.push_back(w << 1);
    for (Bits w : brc) next.push_back((w << 1) | 1U);
    cur = std::move(next);
  }
  return cur;
}

void require_gray(const Code& g) {
  if (g.radix() != 2) throw InvalidArgument("binary code expected");
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (hamming_distance(g[i], g[i + 1]) != 1) {
      throw InvalidArgument("input is not a Gray code: step " + std::to_string(i) + " from " +
                            to_string(g[i], 2) + " to " + to_string(g[i + 1], 2));
    }
  }
  if (g.cyclic() && g.size() > 1 && hamming_distance(g.back(), g.front()) != 1) {
    throw InvalidArgument("input claims to be cyclic but its last and first words are not adjacent");
  }
}

class MonotoneSearch {
 public:
  MonotoneSearch(std::size_t n, Bits start, Bits second, Bits target, std::uint64_t budget,
                 bool shifted)
      : n_(n),
        size_(Bits{1} << n),
        target_(target),
        budget_(budget),
        shifted_(shifted),
        visited_(size_, false),
        level_total_(n + 1, 0),
        level_seen_(n + 1, 0) {
    for (Bits w = 0; w < size_; ++w) ++level_total_[std::popcount(w)];
    visit(start);
    if (second != start) visit(second);
  }

  std::optional<std::vector<Bits>> run() {
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  void visit(Bits w) {
    visited_[w] = true;
    ++level_seen_[std::popcount(w)];
    max_weight_ = std::max(max_weight_, std::popcount(w));
    path_.push_back(w);
  }

  int free_degree(Bits w) const {
    int d = 0;
    for (std::size_t b = 0; b < n_; ++b) d += !visited_[w ^ (Bits{1} << b)];
    return d;
  }

  bool lower_levels_done(int new_max) const {
    for (int k = 0; k <= new_max - 2; ++k) {
      if (level_seen_[k] != level_total_[k]) return false;
    }
    return true;
  }

  bool extend() {
    if (path_.size() == size_) return path_.back() == target_ && structure_ok();
    if (++nodes_ > budget_) {
      throw SearchBudgetExceeded("monotone search exceeded " + std::to_string(budget_) +
                                 " nodes at n = " + std::to_string(n_));
    }
    const Bits u = path_.back();
    std::vector<std::pair<int, Bits>> cands;
    for (std::size_t b = 0; b < n_; ++b) {
      const Bits v = u ^ (Bits{1} << b);
      if (visited_[v]) continue;
      if (v == target_ && path_.size() + 1 != size_) continue;
      const int wv = std::popcount(v);
      const int new_max = std::max(max_weight_, wv);
      if (wv < new_max - 1) continue;
      if (new_max > max_weight_ && !lower_levels_done(new_max)) continue;
      cands.emplace_back(free_degree(v), v);
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [deg, v] : cands) {
      if (stranded(u, v)) continue;
      const int saved_max = max_weight_;
      visit(v);
      if (extend()) return true;
      path_.pop_back();
      visited_[v] = false;
      --level_seen_[std::popcount(v)];
      max_weight_ = saved_max;
    }
    return false;
  }

  // Moving u -> v seals u; an unvisited neighbour of u that then has no
  // unvisited neighbour and is not adjacent to v can never be reached.
  bool stranded(Bits u, Bits v) const {
    for (std::size_t b = 0; b < n_; ++b) {
      const Bits x = u ^ (Bits{1} << b);
      if (x == v || visited_[x]) continue;
      const Bits d = x ^ v;
      const bool adjacent_to_v = std::has_single_bit(d);
      int free = 0;
      for (std::size_t c = 0; c < n_; ++c) {
        const Bits y = x ^ (Bits{1} << c);
        free += (!visited_[y] && y != v);
      }
      if (free == 0 && !adjacent_to_v) return true;
    }
    return false;
  }

  bool structure_ok() const {
    if (!shifted_) return true;
    return has_shifted_structure(to_code(path_, n_, false));
  }

  std::size_t n_;
  Bits size_;
  Bits target_;
  std::uint64_t budget_;
  bool shifted_;
  std::uint64_t nodes_ = 0;
  int max_weight_ = 0;
  std::vector<bool> visited_;
  std::vector<std::size_t> level_total_;
  std::vector<std::size_t> level_seen_;
  std::vector<Bits> path_;
};

}  // namespace

Code brgc(std::size_t n) {
  check_bits(n);
  return to_code(brgc_bits(n), n, true);
}

EndpointPath ruskey_path(std::size_t n) {
  check_bits(n);
  Code c = to_code(ruskey_bits(n), n, false);
  const Word first = Word::constant(2, n, 0);
  Word last = Word::constant(2, n, 1);
  if (n % 2 == 0) {
    std::vector<Digit> d(n, 1);
    d[0] = 0;
    last = Word(2, std::move(d));
  }
  return make_endpoint_path(std::move(c), first, last);
}

Code complementary_even(std::size_t n) {
  check_bits(n, 2);
  if (n % 2 != 0) {
    throw NonexistenceError("no complementary binary Gray code exists for odd n = " +
                            std::to_string(n));
  }
  const Code p = reverse_each_word(ruskey_path(n - 1).code);
  Code out = prefix(p, 0);
  out.append(prefix(complement_each(p), 1));
  out.set_cyclic(true);
  return out;
}

Code double_rev_ref(const Code& g) {
  require_gray(g);
  if (g.empty()) throw InvalidArgument("double_rev_ref on an empty code");
  Code out(2, g.length() + 1, g.cyclic() && g.size() % 2 == 0);
  out.reserve(2 * g.size());
  std::vector<Digit> buf(g.length() + 1);
  for (std::size_t i = 0; i < 2 * g.size(); ++i) {
    const WordView w = g[i / 2];
    std::copy(w.begin(), w.end(), buf.begin());
    const std::size_t r = i % 4;
    buf.back() = (r == 1 || r == 2) ? 1 : 0;
    out.push_back_unchecked(buf);
  }
  return out;
}

Code odd_missing_two(std::size_t n) {
  check_bits(n, 3);
  if (n % 2 == 0) throw InvalidArgument("odd_missing_two requires odd n");
  const Code mirrored = reverse_each_word(ruskey_path(n - 2).code);
  const Code h = apply_transform(double_rev_ref(mirrored), transform::DropFirst{});
  Code out = prefix(h, 0);
  out.append(prefix(complement_each(h), 1));
  out.set_cyclic(true);
  return out;
}

Code odd_all_words(std::size_t n) {
  check_bits(n, 3);
  if (n % 2 == 0) throw InvalidArgument("odd_all_words requires odd n");
  return double_rev_ref(complementary_even(n - 1));
}

EndpointPath monotone_gray(std::size_t n, MonotoneVariant variant, std::uint64_t node_budget) {
  check_bits(n);
  if (n > 16) throw InvalidArgument("monotone search is limited to n <= 16");
  const Bits all = (Bits{1} << n) - 1;
  Bits start = 0;
  Bits second = 0;
  if (variant == MonotoneVariant::Plain) {
    if (n % 2 == 0) throw InvalidArgument("plain monotone path 0^n -> 1^n needs odd n");
  } else {
    if (n % 2 != 0) throw InvalidArgument("shifted monotone path needs even n");
    start = Bits{1} << (n - 1);
    second = 0;
  }
  MonotoneSearch search(n, start, second, all, node_budget, variant == MonotoneVariant::Shifted);
  auto path = search.run();
  if (!path) throw SearchBudgetExceeded("no monotone path found for n = " + std::to_string(n));
  Code c = to_code(*path, n, false);
  const Word first = c.word(0);
  const Word last = Word::constant(2, n, 1);
  return make_endpoint_path(std::move(c), first, last);
}

bool is_weight_monotone(const Code& c) {
  std::size_t max_weight = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t w = weight(c[i]);
    if (w + 1 < max_weight) return false;
    max_weight = std::max(max_weight, w);
  }
  return true;
}

bool has_shifted_structure(const Code& c) {
  if (c.radix() != 2 || c.length() < 2 || c.empty()) return false;
  std::size_t first = c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (weight(c[i]) == 2 && c[i][0] == 1) {
      first = i;
      break;
    }
  }
  if (first == c.size()) return false;
  const std::size_t last = c.size() - 1;
  if (first + 1 >= last) return true;
  for (std::size_t p = 0; p < c.length(); ++p) {
    bool zero = false;
    for (std::size_t i = first + 1; i < last && !zero; ++i) zero = c[i][p] == 0;
    if (!zero) return false;
  }
  return true;
}

}  // namespace graycode::binary
