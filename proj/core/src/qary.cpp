#include "graycode/qary.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "graycode/binary.hpp"
#include "graycode/error.hpp"
#include "graycode/transform.hpp"

namespace graycode::qary {

namespace {

void check_radix(int q, int min) {
  if (q < min || q > kMaxRadix) {
    throw InvalidArgument("radix " + std::to_string(q) + " outside [" + std::to_string(min) +
                          ", " + std::to_string(kMaxRadix) + "]");
  }
}

void check_length(std::size_t n, std::size_t min = 1) {
  if (n < min || n > 64) {
    throw InvalidArgument("word length " + std::to_string(n) + " outside [" +
                          std::to_string(min) + ", 64]");
  }
}

// Refuses outputs above 2^32 words before any allocation happens.
void check_size(int q, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(q);
    if (total > (std::size_t{1} << 32)) {
      throw InvalidArgument("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                            " is too large to materialise");
    }
  }
}

Digit level_digit(int level, Orientation o, int q) {
  return static_cast<Digit>(o == Orientation::Low ? 1 + level : q - 1 - level);
}

// Reflected mixed-radix sequence over `k` digits of base r; the last digit
// changes fastest. `emit` sees the level vector after every step.
template <class F>
void for_each_reflected(std::size_t k, int r, F&& emit) {
  std::vector<int> level(k, 0);
  std::vector<int> dir(k, 1);
  emit(level);
  for (;;) {
    std::size_t j = k;
    while (j > 0) {
      const int next = level[j - 1] + dir[j - 1];
      if (next >= 0 && next < r) break;
      --j;
    }
    if (j == 0) return;
    --j;
    level[j] += dir[j];
    for (std::size_t t = j + 1; t < k; ++t) dir[t] = -dir[t];
    emit(level);
  }
}

struct Expansion {
  Code code;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // [begin, end) per skeleton word
  std::vector<std::size_t> event_position;                  // position of each free choice
};

// Replaces every skeleton word by a reflected (q-1)-ary instance on its
// support. Free choices (a position switching on) are consumed in order from
// `choices`; missing entries default to Low.
Expansion expand(const Code& skeleton, int q, const std::vector<Orientation>& choices) {
  const std::size_t n = skeleton.length();
  Expansion out{Code(q, n), {}, {}};
  std::vector<Digit> current(n, 0);
  std::vector<Digit> buf(n);
  std::vector<std::size_t> support;
  std::vector<Orientation> orient;
  for (std::size_t k = 0; k < skeleton.size(); ++k) {
    const WordView b = skeleton[k];
    support.clear();
    orient.clear();
    for (std::size_t p = 0; p < n; ++p) {
      if (!b[p]) continue;
      support.push_back(p);
      const bool inherited = k > 0 && skeleton[k - 1][p] == 1;
      if (inherited) {
        orient.push_back(current[p] == 1 ? Orientation::Low : Orientation::High);
      } else {
        const std::size_t e = out.event_position.size();
        out.event_position.push_back(p);
        orient.push_back(e < choices.size() ? choices[e] : Orientation::Low);
      }
    }
    const std::size_t begin = out.code.size();
    std::fill(buf.begin(), buf.end(), Digit{0});
    if (support.empty()) {
      out.code.push_back_unchecked(buf);
    } else {
      for_each_reflected(support.size(), q - 1, [&](const std::vector<int>& level) {
        for (std::size_t i = 0; i < support.size(); ++i) {
          buf[support[i]] = level_digit(level[i], orient[i], q);
        }
        out.code.push_back_unchecked(buf);
      });
    }
    out.ranges.emplace_back(begin, out.code.size());
    const WordView last = out.code.back();
    current.assign(last.begin(), last.end());
  }
  return out;
}

// Two passes: all-Low first, then flip the last free choice of every
// position that finished at q - 1, so the final word becomes 1...1.
Expansion expand_to_ones(const Code& skeleton, int q) {
  Expansion first = expand(skeleton, q, {});
  std::vector<Orientation> choices(first.event_position.size(), Orientation::Low);
  const WordView end = first.code.back();
  for (std::size_t p = 0; p < skeleton.length(); ++p) {
    if (end[p] != q - 1 || q == 2) continue;
    for (std::size_t e = choices.size(); e-- > 0;) {
      if (first.event_position[e] == p) {
        choices[e] = Orientation::High;
        break;
      }
    }
  }
  Expansion second = expand(skeleton, q, choices);
  for (Digit d : second.code.back()) {
    if (d != 1) throw Error("sentinel planning failed to end at the all-ones word");
  }
  return second;
}

Word ones(int q, std::size_t n) { return Word::constant(q, n, 1); }
Word zeros(int q, std::size_t n) { return Word::constant(q, n, 0); }

Code full_cycle(int q) {
  Code c(q, 1, true);
  for (int d = 0; d < q; ++d) {
    const Digit x = static_cast<Digit>(d);
    c.push_back_unchecked(WordView(&x, 1));
  }
  return c;
}

}  // namespace

Code reflected_on_support(const SupportInstance& inst, std::size_t n) {
  check_radix(inst.radix, 3);
  check_length(n);
  if (inst.support.empty()) throw InvalidArgument("support instance needs a non-empty support");
  if (inst.orientation.size() != inst.support.size()) {
    throw InvalidArgument("one orientation per support position is required");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t p : inst.support) {
    if (p >= n || seen[p]) throw InvalidArgument("support positions must be distinct and < n");
    seen[p] = true;
  }
  Code c(inst.radix, n);
  std::vector<Digit> buf(n, 0);
  for_each_reflected(inst.support.size(), inst.radix - 1, [&](const std::vector<int>& level) {
    for (std::size_t i = 0; i < inst.support.size(); ++i) {
      buf[inst.support[i]] = level_digit(level[i], inst.orientation[i], inst.radix);
    }
    c.push_back_unchecked(buf);
  });
  return c;
}

EndpointPath lee_code_odd_n(int q, std::size_t n) {
  check_radix(q, 3);
  check_length(n);
  if (n % 2 == 0) throw InvalidArgument("lee_code_odd_n requires odd n");
  check_size(q, n);
  const Code skeleton = reverse_each_word(binary::ruskey_path(n).code);
  return make_endpoint_path(expand_to_ones(skeleton, q).code, zeros(q, n), ones(q, n));
}

EndpointPath lee_path_any(int q, std::size_t n) {
  check_radix(q, 3);
  check_length(n);
  if (n % 2 == 1) return lee_code_odd_n(q, n);
  if (q % 2 == 0) {
    throw NonexistenceError("no 0^n -> 1^n Lee path construction for even n and even q");
  }
  check_size(q, n);
  const Code g = lee_code_odd_n(q, n - 1).code;
  const Code gr = reverse_order(g);
  Code out(q, n);
  out.reserve(g.size() * static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) {
    const Digit d = static_cast<Digit>(j == 0 ? 0 : q - j);
    out.append(prefix(j % 2 ? gr : g, d));
  }
  out.set_cyclic(false);
  return make_endpoint_path(std::move(out), zeros(q, n), ones(q, n));
}

Code diagonal_blocks(const Code& ingredient) {
  const int q = ingredient.radix();
  if (ingredient.empty()) throw InvalidArgument("empty ingredient");
  const std::size_t m = ingredient.length();
  if (ingredient.word(0) != zeros(q, m) || ingredient.word(ingredient.size() - 1) != ones(q, m)) {
    throw InvalidArgument("ingredient must run from the all-zeros to the all-ones word");
  }
  const Code base = prefix(ingredient, 0);
  Code out(q, m + 1, true);
  out.reserve(base.size() * static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) out.append(add_diagonal(base, j));
  out.set_cyclic(true);
  return out;
}

Code quasi_complementary_lee(int q, std::size_t n) {
  check_radix(q, 2);
  check_length(n);
  check_size(q, n);
  if (n == 1) return full_cycle(q);
  if (n % 2 == 1 && q % 2 == 0) {
    throw NonexistenceError("no quasi-complementary Lee Gray code exists for odd n = " +
                            std::to_string(n) + " and even q = " + std::to_string(q));
  }
  if (q == 2) return diagonal_blocks(binary::ruskey_path(n - 1).code);
  return diagonal_blocks(lee_path_any(q, n - 1).code);
}

MissingWordsCode quasi_complementary_lee_missing(int q, std::size_t n, const Word& anchor) {
  check_radix(q, 4);
  check_length(n, 3);
  if (q % 2 != 0) throw InvalidArgument("the missing-words code needs even q");
  if (n % 2 == 0) throw InvalidArgument("the missing-words code needs odd n");
  if (anchor.radix() != q || anchor.length() != n) {
    throw InvalidArgument("anchor must be a word of length " + std::to_string(n) + " over Z_" +
                          std::to_string(q));
  }
  check_size(q, n);
  const std::size_t m = n - 1;
  const Code skeleton = binary::monotone_gray(m, binary::MonotoneVariant::Shifted).code;
  const Expansion ex = expand_to_ones(skeleton, q);

  std::size_t special = skeleton.size();
  for (std::size_t k = 0; k < skeleton.size(); ++k) {
    if (skeleton[k][0] == 1 && weight(skeleton[k]) == 2) {
      special = k;
      break;
    }
  }
  if (special == skeleton.size()) throw Error("skeleton lacks a weight-2 word on position 1");

  // Drop the leading instance 10..0 ... (q-1)0..0; its words except (q-1)0..0
  // are re-inserted in pairs where position 1 steps between i and i + 1 (i odd).
  Code ingredient(q, m);
  ingredient.reserve(ex.code.size());
  std::vector<Digit> lone(m, 0);
  for (std::size_t k = 1; k < skeleton.size(); ++k) {
    const auto [begin, end] = ex.ranges[k];
    for (std::size_t i = begin; i < end; ++i) {
      ingredient.push_back_unchecked(ex.code[i]);
      if (k != special || i + 1 == end) continue;
      const Digit a = ex.code[i][0];
      const Digit b = ex.code[i + 1][0];
      if (a == b || std::min(a, b) % 2 == 0) continue;
      lone[0] = a;
      ingredient.push_back_unchecked(lone);
      lone[0] = b;
      ingredient.push_back_unchecked(lone);
    }
  }

  std::vector<Digit> base(n, 0);
  base[1] = static_cast<Digit>(q - 1);
  std::vector<Digit> offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = static_cast<Digit>((anchor[i] - base[i] + q) % q);
  }
  Code code = translate(diagonal_blocks(ingredient), Word(q, offset));
  code.set_cyclic(true);

  MissingSet missing{anchor, {}};
  for (int i = 0; i < q; ++i) missing.words.push_back(add_diagonal(anchor, i));
  return {std::move(code), std::move(missing)};
}

MissingWordsCode quasi_complementary_lee_missing(int q, std::size_t n) {
  check_radix(q, 4);
  check_length(n, 3);
  std::vector<Digit> d(n, 0);
  d[1] = static_cast<Digit>(q - 1);
  return quasi_complementary_lee_missing(q, n, Word(q, std::move(d)));
}

Code digit_sweep_doubling(const Code& g) {
  const int q = g.radix();
  if (g.empty()) throw InvalidArgument("digit_sweep_doubling on an empty code");
  Code out(q, g.length() + 1, g.cyclic() && g.size() % 2 == 0);
  out.reserve(g.size() * static_cast<std::size_t>(q));
  std::vector<Digit> buf(g.length() + 1);
  for (std::size_t b = 0; b < g.size(); ++b) {
    std::copy(g[b].begin(), g[b].end(), buf.begin());
    for (int r = 0; r < q; ++r) {
      buf.back() = static_cast<Digit>(b % 2 == 0 ? r : q - 1 - r);
      out.push_back_unchecked(buf);
    }
  }
  return out;
}

Code lee_separation_bounded(int q, std::size_t n) {
  check_radix(q, 4);
  check_length(n, 3);
  if (q % 2 != 0 || n % 2 == 0) {
    throw InvalidArgument("the bounded-separation code needs even q and odd n");
  }
  check_size(q, n);
  return digit_sweep_doubling(quasi_complementary_lee(q, n - 1));
}

EndpointPath hamming_ingredient_even(int q, std::size_t n) {
  check_radix(q, 4);
  check_length(n, 2);
  if (q % 2 != 0 || n % 2 != 0) {
    throw InvalidArgument("hamming_ingredient_even needs even q and even n");
  }
  check_size(q, n);
  Code g = digit_sweep_doubling(lee_code_odd_n(q, n - 1).code);
  g = apply_transform(g, transform::SwapLastTwo{});
  return make_endpoint_path(std::move(g), zeros(q, n), ones(q, n));
}

Code quasi_complementary_hamming(int q, std::size_t n) {
  check_radix(q, 2);
  check_length(n);
  check_size(q, n);
  if (q == 2) return quasi_complementary_lee(2, n);
  if (n == 1) return full_cycle(q);
  const std::size_t m = n - 1;
  if (m % 2 == 1) return diagonal_blocks(lee_code_odd_n(q, m).code);
  if (q % 2 == 1) return diagonal_blocks(lee_path_any(q, m).code);
  return diagonal_blocks(hamming_ingredient_even(q, m).code);
}

}  // namespace graycode::qary
