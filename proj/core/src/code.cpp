#include "graycode/code.hpp"

#include <string>

#include "graycode/error.hpp"

namespace graycode {

Code::Code(int radix, std::size_t length, bool cyclic)
    : radix_(radix), length_(length), cyclic_(cyclic) {
  if (radix < 2 || radix > kMaxRadix) {
    throw InvalidArgument("radix " + std::to_string(radix) + " outside [2, " +
                          std::to_string(kMaxRadix) + "]");
  }
  if (length == 0) throw InvalidArgument("word length must be at least 1");
}

Code Code::from_strings(int radix, std::size_t length, bool cyclic,
                        std::initializer_list<std::string_view> words) {
  Code c(radix, length, cyclic);
  c.reserve(words.size());
  for (auto w : words) c.push_back(Word::parse(w, radix));
  return c;
}

Code Code::from_strings(int radix, std::size_t length, bool cyclic,
                        const std::vector<std::string>& words) {
  Code c(radix, length, cyclic);
  c.reserve(words.size());
  for (const auto& w : words) c.push_back(Word::parse(w, radix));
  return c;
}

WordView Code::at(std::size_t i) const {
  if (i >= size()) {
    throw InvalidArgument("word index " + std::to_string(i) + " out of range (size " +
                          std::to_string(size()) + ")");
  }
  return (*this)[i];
}

void Code::push_back(WordView w) {
  if (w.size() != length_) {
    throw InvalidArgument("word of length " + std::to_string(w.size()) +
                          " appended to a code of length " + std::to_string(length_));
  }
  for (Digit d : w) {
    if (d >= radix_) {
      throw InvalidArgument("digit " + std::to_string(d) + " out of range for radix " +
                            std::to_string(radix_));
    }
  }
  push_back_unchecked(w);
}

void Code::push_back(const Word& w) {
  if (w.radix() != radix_) {
    throw InvalidArgument("radix " + std::to_string(w.radix()) + " word appended to a radix " +
                          std::to_string(radix_) + " code");
  }
  push_back(w.digits());
}

void Code::push_back_unchecked(WordView w) { data_.insert(data_.end(), w.begin(), w.end()); }

void Code::append(const Code& other) {
  if (other.radix_ != radix_ || other.length_ != length_) {
    throw InvalidArgument("cannot append codes of different shape");
  }
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
}

std::vector<Word> Code::to_words() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(word(i));
  return out;
}

EndpointPath make_endpoint_path(Code code, const Word& first, const Word& last) {
  if (code.empty()) throw InvalidArgument("endpoint path is empty");
  if (code.word(0) != first) {
    throw InvalidArgument("path starts at " + code.word(0).to_string() + ", expected " +
                          first.to_string());
  }
  if (code.word(code.size() - 1) != last) {
    throw InvalidArgument("path ends at " + code.word(code.size() - 1).to_string() +
                          ", expected " + last.to_string());
  }
  return EndpointPath{std::move(code), first, last};
}

}  // namespace graycode
