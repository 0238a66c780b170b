#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graycode {

using Digit = std::uint8_t;
using WordView = std::span<const Digit>;

/// Largest radix representable by a Digit.
inline constexpr int kMaxRadix = 256;

/// A length-n word over Z_q. Index 0 is the leftmost digit, so prefixing
/// attaches at index 0 and suffixing at the end.
class Word {
 public:
  Word() = default;
  Word(int radix, std::vector<Digit> digits);
  Word(int radix, std::initializer_list<int> digits);
  Word(int radix, WordView digits);

  /// Parses a digit string such as "0132" (radix <= 10) or a space separated
  /// list such as "10 3 7".
  static Word parse(std::string_view text, int radix);

  /// All-equal word d d ... d.
  static Word constant(int radix, std::size_t length, Digit d);

  int radix() const { return radix_; }
  std::size_t length() const { return digits_.size(); }
  WordView digits() const { return digits_; }
  operator WordView() const { return digits_; }  // NOLINT(google-explicit-constructor)

  Digit operator[](std::size_t i) const { return digits_[i]; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  /// Concatenated digits for radix <= 10, space separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int radix_ = 2;
  std::vector<Digit> digits_;
};

std::size_t weight(WordView w);
inline std::size_t weight(const Word& w) { return weight(w.digits()); }

/// Number of positions where v and w differ. Throws InvalidArgument on shape mismatch.
std::size_t hamming_distance(const Word& v, const Word& w);
/// Sum over positions of min(|v_i - w_i|, q - |v_i - w_i|).
std::size_t lee_distance(const Word& v, const Word& w);

// Unchecked variants over raw views; the caller guarantees equal lengths.
std::size_t hamming_distance(WordView v, WordView w);
std::size_t lee_distance(WordView v, WordView w, int radix);

/// Renders a view the way Word::to_string would for the given radix.
std::string to_string(WordView w, int radix);

}  // namespace graycode
