#pragma once

#include <cstddef>
#include <initializer_list>
#include <ranges>
#include <string_view>
#include <vector>

#include "graycode/word.hpp"

namespace graycode {

/// An ordered list of equal-length words over Z_q stored contiguously.
///
/// `cyclic()` is the producer's claim that the last word is also adjacent to
/// the first; verification decides whether the claim holds.
class Code {
 public:
  Code() = default;
  /// Requires 2 <= radix <= kMaxRadix and length >= 1.
  Code(int radix, std::size_t length, bool cyclic = false);

  /// Convenience for tests and tables: every entry is parsed with Word::parse.
  static Code from_strings(int radix, std::size_t length, bool cyclic,
                           std::initializer_list<std::string_view> words);
  static Code from_strings(int radix, std::size_t length, bool cyclic,
                           const std::vector<std::string>& words);

  int radix() const { return radix_; }
  std::size_t length() const { return length_; }
  bool cyclic() const { return cyclic_; }
  void set_cyclic(bool c) { cyclic_ = c; }

  std::size_t size() const { return length_ == 0 ? 0 : data_.size() / length_; }
  bool empty() const { return size() == 0; }

  WordView operator[](std::size_t i) const { return {data_.data() + i * length_, length_}; }
  /// Bounds-checked access.
  WordView at(std::size_t i) const;
  Word word(std::size_t i) const { return Word(radix_, (*this)[i]); }
  WordView front() const { return (*this)[0]; }
  WordView back() const { return (*this)[size() - 1]; }

  /// Appends a word; throws InvalidArgument on length or digit range mismatch.
  void push_back(WordView w);
  void push_back(const Word& w);
  /// Appends without validation (hot generator loops).
  void push_back_unchecked(WordView w);
  void append(const Code& other);

  void reserve(std::size_t words) { data_.reserve(words * length_); }
  void clear() { data_.clear(); }

  std::span<const Digit> data() const { return data_; }

  auto words() const {
    return std::views::iota(std::size_t{0}, size()) |
           std::views::transform([this](std::size_t i) { return (*this)[i]; });
  }

  std::vector<Word> to_words() const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int radix_ = 2;
  std::size_t length_ = 0;
  bool cyclic_ = false;
  std::vector<Digit> data_;
};

/// A Hamilton path with declared endpoints.
struct EndpointPath {
  Code code;
  Word first;
  Word last;
};

/// Wraps `code`, checking that it is non-empty and starts and ends at the given words.
EndpointPath make_endpoint_path(Code code, const Word& first, const Word& last);

}  // namespace graycode
