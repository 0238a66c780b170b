#include "graycode/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "graycode/error.hpp"

namespace graycode {

namespace {

void check_radix(int radix) {
  if (radix < 2 || radix > kMaxRadix) {
    throw InvalidArgument("radix " + std::to_string(radix) + " outside [2, " +
                          std::to_string(kMaxRadix) + "]");
  }
}

void check_digits(int radix, WordView digits) {
  for (Digit d : digits) {
    if (d >= radix) {
      throw InvalidArgument("digit " + std::to_string(d) + " out of range for radix " +
                            std::to_string(radix));
    }
  }
}

void check_same_shape(const Word& v, const Word& w) {
  if (v.radix() != w.radix() || v.length() != w.length()) {
    throw InvalidArgument("words differ in radix or length");
  }
}

}  // namespace

Word::Word(int radix, std::vector<Digit> digits) : radix_(radix), digits_(std::move(digits)) {
  check_radix(radix_);
  check_digits(radix_, digits_);
}

Word::Word(int radix, std::initializer_list<int> digits) : radix_(radix) {
  check_radix(radix_);
  digits_.reserve(digits.size());
  for (int d : digits) {
    if (d < 0 || d >= radix) {
      throw InvalidArgument("digit " + std::to_string(d) + " out of range for radix " +
                            std::to_string(radix));
    }
    digits_.push_back(static_cast<Digit>(d));
  }
}

Word::Word(int radix, WordView digits)
    : Word(radix, std::vector<Digit>(digits.begin(), digits.end())) {}

Word Word::parse(std::string_view text, int radix) {
  check_radix(radix);
  std::vector<Digit> digits;
  const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
  if (!spaced) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw InvalidArgument("invalid digit '" + std::string(1, ch) + "' in word '" +
                              std::string(text) + "'");
      }
      digits.push_back(static_cast<Digit>(ch - '0'));
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != ',') ++j;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc() || ptr != text.data() + j || value < 0 || value >= kMaxRadix) {
        throw InvalidArgument("invalid entry '" + std::string(text.substr(i, j - i)) + "'");
      }
      digits.push_back(static_cast<Digit>(value));
      i = j;
    }
  }
  if (digits.empty()) throw InvalidArgument("empty word");
  return Word(radix, std::move(digits));
}

Word Word::constant(int radix, std::size_t length, Digit d) {
  return Word(radix, std::vector<Digit>(length, d));
}

std::string Word::to_string() const { return graycode::to_string(digits_, radix_); }

std::string to_string(WordView w, int radix) {
  std::string out;
  if (radix <= 10) {
    out.reserve(w.size());
    for (Digit d : w) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::size_t weight(WordView w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Digit d) { return d != 0; }));
}

std::size_t hamming_distance(WordView v, WordView w) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) d += v[i] != w[i];
  return d;
}

std::size_t lee_distance(WordView v, WordView w, int radix) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int diff = v[i] > w[i] ? v[i] - w[i] : w[i] - v[i];
    d += static_cast<std::size_t>(std::min(diff, radix - diff));
  }
  return d;
}

std::size_t hamming_distance(const Word& v, const Word& w) {
  check_same_shape(v, w);
  return hamming_distance(v.digits(), w.digits());
}

std::size_t lee_distance(const Word& v, const Word& w) {
  check_same_shape(v, w);
  return lee_distance(v.digits(), w.digits(), v.radix());
}

}  // namespace graycode
