#include "graycode/transform.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "graycode/error.hpp"

namespace graycode {

namespace {

template <class F>
Code map_words(const Code& c, std::size_t out_length, F&& f) {
  Code out(c.radix(), out_length, c.cyclic());
  out.reserve(c.size());
  std::vector<Digit> buf(out_length);
  for (std::size_t i = 0; i < c.size(); ++i) {
    f(c[i], buf);
    out.push_back_unchecked(buf);
  }
  return out;
}

void check_digit(const Code& c, Digit d) {
  if (d >= c.radix()) {
    throw InvalidArgument("digit " + std::to_string(d) + " out of range for radix " +
                          std::to_string(c.radix()));
  }
}

Digit shifted(Digit d, int times, int radix) {
  const int r = ((d + times) % radix + radix) % radix;
  return static_cast<Digit>(r);
}

struct Apply {
  const Code& c;

  Code operator()(const transform::Prefix& t) const {
    check_digit(c, t.digit);
    return map_words(c, c.length() + 1, [&](WordView w, std::vector<Digit>& out) {
      out[0] = t.digit;
      std::copy(w.begin(), w.end(), out.begin() + 1);
    });
  }
  Code operator()(const transform::Suffix& t) const {
    check_digit(c, t.digit);
    return map_words(c, c.length() + 1, [&](WordView w, std::vector<Digit>& out) {
      std::copy(w.begin(), w.end(), out.begin());
      out.back() = t.digit;
    });
  }
  Code operator()(const transform::ComplementEach&) const {
    if (c.radix() != 2) throw InvalidArgument("complement requires a binary code");
    return map_words(c, c.length(), [](WordView w, std::vector<Digit>& out) {
      for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<Digit>(1 - w[i]);
    });
  }
  Code operator()(const transform::ReverseOrder&) const {
    Code out(c.radix(), c.length(), c.cyclic());
    out.reserve(c.size());
    for (std::size_t i = c.size(); i-- > 0;) out.push_back_unchecked(c[i]);
    return out;
  }
  Code operator()(const transform::ReverseEachWord&) const {
    return map_words(c, c.length(), [](WordView w, std::vector<Digit>& out) {
      std::reverse_copy(w.begin(), w.end(), out.begin());
    });
  }
  Code operator()(const transform::AddDiagonal& t) const {
    return map_words(c, c.length(), [&](WordView w, std::vector<Digit>& out) {
      for (std::size_t i = 0; i < w.size(); ++i) out[i] = shifted(w[i], t.times, c.radix());
    });
  }
  Code operator()(const transform::Translate& t) const {
    if (t.offset.radix() != c.radix() || t.offset.length() != c.length()) {
      throw InvalidArgument("translation word does not match the code's radix and length");
    }
    return map_words(c, c.length(), [&](WordView w, std::vector<Digit>& out) {
      for (std::size_t i = 0; i < w.size(); ++i) out[i] = shifted(w[i], t.offset[i], c.radix());
    });
  }
  Code operator()(const transform::DropFirst&) const {
    if (c.empty()) throw InvalidArgument("drop_first on an empty code");
    Code out(c.radix(), c.length(), false);
    out.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out.push_back_unchecked(c[i]);
    return out;
  }
  Code operator()(const transform::SwapLastTwo&) const {
    if (c.size() < 2) throw InvalidArgument("swap_last_two needs at least two words");
    Code out(c.radix(), c.length(), false);
    out.reserve(c.size());
    for (std::size_t i = 0; i + 2 < c.size(); ++i) out.push_back_unchecked(c[i]);
    out.push_back_unchecked(c[c.size() - 1]);
    out.push_back_unchecked(c[c.size() - 2]);
    return out;
  }
};

}  // namespace

Code apply_transform(const Code& c, const Transform& t) { return std::visit(Apply{c}, t); }

Code prefix(const Code& c, Digit d) { return apply_transform(c, transform::Prefix{d}); }
Code suffix(const Code& c, Digit d) { return apply_transform(c, transform::Suffix{d}); }
Code complement_each(const Code& c) { return apply_transform(c, transform::ComplementEach{}); }
Code reverse_order(const Code& c) { return apply_transform(c, transform::ReverseOrder{}); }
Code reverse_each_word(const Code& c) { return apply_transform(c, transform::ReverseEachWord{}); }
Code add_diagonal(const Code& c, int times) {
  return apply_transform(c, transform::AddDiagonal{times});
}
Code translate(const Code& c, const Word& offset) {
  return apply_transform(c, transform::Translate{offset});
}

Word complement(const Word& w) {
  if (w.radix() != 2) throw InvalidArgument("complement requires a binary word");
  std::vector<Digit> d(w.begin(), w.end());
  for (auto& x : d) x = static_cast<Digit>(1 - x);
  return Word(2, std::move(d));
}

Word add_diagonal(const Word& w, int times) {
  std::vector<Digit> d(w.begin(), w.end());
  for (auto& x : d) x = shifted(x, times, w.radix());
  return Word(w.radix(), std::move(d));
}

Word reversed(const Word& w) {
  std::vector<Digit> d(w.begin(), w.end());
  std::reverse(d.begin(), d.end());
  return Word(w.radix(), std::move(d));
}

}  // namespace graycode
