#pragma once

#include <variant>

#include "graycode/code.hpp"

namespace graycode {

namespace transform {

struct Prefix { Digit digit; };
struct Suffix { Digit digit; };
struct ComplementEach {};
struct ReverseOrder {};
struct ReverseEachWord {};
/// Adds times * (1, 1, ..., 1) to every word.
struct AddDiagonal { int times = 1; };
struct Translate { Word offset; };
struct DropFirst {};
struct SwapLastTwo {};

}  // namespace transform

using Transform = std::variant<transform::Prefix, transform::Suffix, transform::ComplementEach,
                               transform::ReverseOrder, transform::ReverseEachWord,
                               transform::AddDiagonal, transform::Translate, transform::DropFirst,
                               transform::SwapLastTwo>;

/// Applies a structural transform. Element-wise transforms keep word order and
/// the cyclic claim; DropFirst and SwapLastTwo clear it.
Code apply_transform(const Code& c, const Transform& t);

Code prefix(const Code& c, Digit d);
Code suffix(const Code& c, Digit d);
Code complement_each(const Code& c);
Code reverse_order(const Code& c);
Code reverse_each_word(const Code& c);
Code add_diagonal(const Code& c, int times = 1);
Code translate(const Code& c, const Word& offset);

Word complement(const Word& w);
Word add_diagonal(const Word& w, int times = 1);
Word reversed(const Word& w);

}  // namespace graycode
