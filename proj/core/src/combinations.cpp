#include "graycode/combinations.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <charconv>
#include <string>

#include "graycode/error.hpp"
#include "graycode/transform.hpp"

namespace graycode::combinations {

namespace {

using Rows = std::vector<std::vector<Digit>>;

constexpr std::size_t kMaxGround = 24;

Rows em_rows(std::size_t m, std::size_t k) {
  if (k == 0) return {std::vector<Digit>(m, 0)};
  if (k == m) return {std::vector<Digit>(m, 1)};
  Rows out;
  for (auto& r : em_rows(m - 1, k)) {
    r.insert(r.begin(), 0);
    out.push_back(std::move(r));
  }
  Rows mid = em_rows(m - 2, k - 1);
  for (auto it = mid.rbegin(); it != mid.rend(); ++it) {
    it->insert(it->begin(), {1, 0});
    out.push_back(std::move(*it));
  }
  if (k >= 2) {
    for (auto& r : em_rows(m - 2, k - 2)) {
      r.insert(r.begin(), {1, 1});
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Subsets of {1..m} of size 3 as sorted element triples.
using Triple = std::array<std::size_t, 3>;

std::vector<Triple> adjacent_triples(std::size_t m) {
  if (m == 4) return {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
  const std::size_t s = m - 2;  // the inner ground set is {1..s}
  std::vector<Triple> out;
  out.reserve(binomial(m, 3));
  for (std::size_t x = s; x >= 1; --x) out.push_back({x, s + 1, s + 2});
  std::size_t layer = s + 2;
  auto toggle = [&] { layer = layer == s + 2 ? s + 1 : s + 2; };
  auto pair_in = [&](std::size_t a, std::size_t b) { out.push_back({a, b, layer}); };
  for (std::size_t a = 1; a + 3 <= s; ++a) {
    for (std::size_t b = s; b > a; --b) pair_in(a, b);
    toggle();
    for (std::size_t b = a + 1; b <= s; ++b) pair_in(a, b);
  }
  pair_in(s - 2, s);
  pair_in(s - 1, s);
  toggle();
  pair_in(s - 1, s);
  pair_in(s - 2, s);
  pair_in(s - 2, s - 1);
  toggle();
  pair_in(s - 2, s - 1);
  auto inner = adjacent_triples(s);
  out.insert(out.end(), inner.begin(), inner.end());
  return out;
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * num is divisible by i; dividing out gcd(r, i) first keeps the product exact
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    const std::uint64_t num = (n - k + i) / (i / g);
    r /= g;
    if (r > UINT64_MAX / num) throw InvalidArgument("binomial coefficient overflows 64 bits");
    r *= num;
  }
  return r;
}

Code eades_mckay(std::size_t k, std::size_t m) {
  if (m < 1 || m > kMaxGround) {
    throw InvalidArgument("ground set size must lie in [1, " + std::to_string(kMaxGround) + "]");
  }
  if (k > m) throw InvalidArgument("subset size exceeds ground set size");
  Code c(2, m);
  for (const auto& r : em_rows(m, k)) c.push_back_unchecked(r);
  return c;
}

Code complementary_subsets(std::size_t n) {
  if (n < 1 || 2 * n > kMaxGround) throw InvalidArgument("n out of range");
  const Code half = prefix(reverse_each_word(eades_mckay(n, 2 * n - 1)), 0);
  Code out = half;
  out.append(complement_each(half));
  out.set_cyclic(true);
  return out;
}

Code adjacent_transposition_combinations(std::size_t m) {
  if (m < 4 || m % 2 != 0 || m > 64) {
    throw NonexistenceError("adjacent interchange 3-subset codes need even m >= 4");
  }
  Code c(2, m);
  std::vector<Digit> buf(m);
  for (const auto& t : adjacent_triples(m)) {
    std::fill(buf.begin(), buf.end(), Digit{0});
    for (std::size_t e : t) buf[e - 1] = 1;
    c.push_back_unchecked(buf);
  }
  return c;
}

std::vector<std::size_t> subset_elements(WordView incidence) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < incidence.size(); ++i) {
    if (incidence[i]) out.push_back(i + 1);
  }
  return out;
}

std::string subset_string(WordView incidence) {
  const bool compact = incidence.size() <= 9;
  std::string out;
  for (std::size_t e : subset_elements(incidence)) {
    if (!compact && !out.empty()) out.push_back(' ');
    out += std::to_string(e);
  }
  return out;
}

Word incidence_from_subset(std::string_view text, std::size_t m) {
  std::vector<Digit> w(m, 0);
  auto mark = [&](std::size_t e) {
    if (e < 1 || e > m) throw InvalidArgument("element " + std::to_string(e) + " not in 1.." + std::to_string(m));
    if (w[e - 1]) throw InvalidArgument("element " + std::to_string(e) + " repeated");
    w[e - 1] = 1;
  };
  if (text.find(' ') == std::string_view::npos) {
    if (m > 9 && text.size() > 1) {
      throw InvalidArgument("elements must be space separated when m > 9");
    }
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InvalidArgument("invalid element character");
      mark(static_cast<std::size_t>(ch - '0'));
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      if (i == text.size()) break;
      std::size_t e = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), e);
      if (ec != std::errc()) throw InvalidArgument("invalid element list");
      mark(e);
      i = static_cast<std::size_t>(ptr - text.data());
    }
  }
  return Word(2, std::move(w));
}

}  // namespace graycode::combinations
