#include "graycode/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

namespace graycode::text {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

void write_code(std::ostream& out, const Code& c, Format f) {
  if (f == Format::Digits && c.radix() > 10) {
    throw InvalidArgument("digit output needs radix <= 10; use the spaced format");
  }
  std::string line;
  for (std::size_t i = 0; i < c.size(); ++i) {
    line.clear();
    const WordView w = c[i];
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (f == Format::Digits) {
        line.push_back(static_cast<char>('0' + w[p]));
      } else {
        if (p) line.push_back(' ');
        line += std::to_string(w[p]);
      }
    }
    line.push_back('\n');
    out << line;
  }
}

ParsedCode read_code(std::istream& in, std::optional<int> radix) {
  std::vector<std::vector<Digit>> rows;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t number = 0;
  int max_digit = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    const std::string_view body(line.data() + first, last - first + 1);
    std::vector<Digit> row;
    if (body.find_first_of(" \t") == std::string_view::npos) {
      for (char ch : body) {
        if (ch < '0' || ch > '9') {
          throw ParseError(number, "unexpected character '" + std::string(1, ch) + "'");
        }
        row.push_back(static_cast<Digit>(ch - '0'));
      }
    } else {
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
        if (i == body.size()) break;
        int value = -1;
        auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), value);
        const std::size_t stop = static_cast<std::size_t>(ptr - body.data());
        if (ec != std::errc() || value < 0 || value >= kMaxRadix ||
            (stop < body.size() && body[stop] != ' ' && body[stop] != '\t')) {
          throw ParseError(number, "invalid entry");
        }
        row.push_back(static_cast<Digit>(value));
        i = stop;
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(number, "word has " + std::to_string(row.size()) + " entries, expected " +
                                   std::to_string(rows.front().size()));
    }
    for (Digit d : row) max_digit = std::max<int>(max_digit, d);
    rows.push_back(std::move(row));
    lines.push_back(number);
  }
  if (in.bad()) throw ParseError(number, "read error");
  if (rows.empty()) throw ParseError(number, "no words found");
  const int q = radix.value_or(std::max(2, max_digit + 1));
  if (q < 2 || q > kMaxRadix) throw ParseError(0, "radix out of range");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Digit d : rows[r]) {
      if (d >= q) {
        throw ParseError(lines[r], "digit " + std::to_string(d) + " out of range for radix " +
                                       std::to_string(q));
      }
    }
  }
  ParsedCode out{Code(q, rows.front().size()), std::move(lines)};
  out.code.reserve(rows.size());
  for (const auto& r : rows) out.code.push_back_unchecked(r);
  return out;
}

}  // namespace graycode::text
