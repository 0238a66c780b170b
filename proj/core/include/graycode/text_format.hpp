#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graycode/code.hpp"
#include "graycode/error.hpp"

namespace graycode::text {

enum class Format {
  Digits,  // "0132" one word per line, radix <= 10
  Spaced,  // "0 1 3 2"
};

/// Malformed input; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedCode {
  Code code;
  /// 1-based source line of every word.
  std::vector<std::size_t> lines;
};

/// Writes one word per line with a trailing newline.
void write_code(std::ostream& out, const Code& c, Format f);

/// Reads one word per line. Blank lines and lines starting with '#' are
/// skipped. Each line is space separated when it contains whitespace and a
/// digit string otherwise. The radix defaults to max digit + 1 (at least 2).
ParsedCode read_code(std::istream& in, std::optional<int> radix = std::nullopt);

}  // namespace graycode::text
