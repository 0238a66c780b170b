#pragma once

#include <cstddef>
#include <vector>

#include "graycode/code.hpp"

namespace graycode::qary {

/// Start sentinel of a position inside a support instance.
enum class Orientation {
  Low,   // starts at 1 and climbs towards q - 1
  High,  // starts at q - 1 and descends towards 1
};

/// A (q-1)-ary reflected Gray code placed on the support of a binary word.
struct SupportInstance {
  /// 0-based positions, most significant first; the last one changes fastest.
  std::vector<std::size_t> support;
  /// One entry per support position.
  std::vector<Orientation> orientation;
  int radix = 3;
};

/// The q words that the even-q missing-words code leaves out:
/// anchor + i * (1, ..., 1) for 0 <= i < q.
struct MissingSet {
  Word anchor;
  std::vector<Word> words;
};

struct MissingWordsCode {
  Code code;
  MissingSet missing;
};

/// (q-1)^|support| words of length n, zero off the support; on the support the
/// reflected code over levels 0..q-2 with level l mapped to 1 + l (Low) or
/// q - 1 - l (High). No step moves a digit directly between 1 and q - 1 when q >= 4.
Code reflected_on_support(const SupportInstance& inst, std::size_t n);

/// Complete Lee Gray path of Z_q^n from 0^n to 1^n (q >= 3, n odd): the
/// digit-reversed Ruskey path expanded support by support, with the final
/// sentinel of each position fixed by its last free choice.
EndpointPath lee_code_odd_n(int q, std::size_t n);

/// Lee Gray path 0^n -> 1^n for n odd (any q >= 3) or n even with q odd.
/// For n even: 0G, (q-1)G^R, (q-2)G, ..., 1G with G = lee_code_odd_n(q, n - 1).
EndpointPath lee_path_any(int q, std::size_t n);

/// Cyclic Lee Gray code of Z_q^n with word (i + q^(n-1)) = word i + (1, ..., 1).
/// Exists iff n = 1, n is even or q is odd; otherwise throws NonexistenceError.
Code quasi_complementary_lee(int q, std::size_t n);

/// The q even, n odd relaxation: a cyclic Lee Gray code of Z_q^n minus
/// anchor + i(1,...,1), pairing each word with its diagonal shift at
/// separation q^(n-1) - 1. `anchor` defaults to 0(q-1)0...0.
MissingWordsCode quasi_complementary_lee_missing(int q, std::size_t n, const Word& anchor);
MissingWordsCode quasi_complementary_lee_missing(int q, std::size_t n);

/// Appends a last digit that sweeps 0..q-1 on even blocks and q-1..0 on odd
/// blocks: word i = g(floor(i/q)) followed by that digit.
Code digit_sweep_doubling(const Code& g);

/// Complete cyclic Lee code of Z_q^n (q even >= 4, n odd >= 3) whose diagonal
/// separations deviate from q^(n-1) by at least 1 and at most q - 1.
Code lee_separation_bounded(int q, std::size_t n);

/// Hamming (not Lee) Gray path 0^n -> 1^n for q even >= 4 and n even.
EndpointPath hamming_ingredient_even(int q, std::size_t n);

/// Cyclic quasi-complementary Gray code in the Hamming metric, q >= 3, n >= 1.
Code quasi_complementary_hamming(int q, std::size_t n);

/// Prefix-0 blocks shifted along the diagonal: 0A, 0A + 1, ..., 0A + (q-1).
/// A must run from 0^(n-1) to 1^(n-1).
Code diagonal_blocks(const Code& ingredient);

}  // namespace graycode::qary
