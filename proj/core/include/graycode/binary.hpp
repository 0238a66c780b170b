#pragma once

#include <cstddef>
#include <cstdint>

#include "graycode/code.hpp"

namespace graycode::binary {

/// Gray's binary reflected code: cyclic, starts at 0^n, ends at 10^(n-1).
Code brgc(std::size_t n);

/// Endpoint-controlled Hamilton path of the n-cube built by suffix recursion
/// from E(1) = [0, 1]:
///   O(n+1) = E(n)0, BRC(n)1         (0^n -> 01^(n-1), n even)
///   E(n+1) = O(n)0, reverse(BRC(n))1 (0^n -> 1^n,     n odd)
/// where BRC is the complemented reflected code.
EndpointPath ruskey_path(std::size_t n);

/// 0P, 1~P with P the digit-mirrored ruskey_path(n - 1): word i + 2^(n-1) is the
/// complement of word i.
/// n must be even; odd n throws NonexistenceError.
Code complementary_even(std::size_t n);

/// Doubles a binary Gray code onto n + 1 bits: output word i is input word
/// floor(i/2) followed by 0 when i = 0, 3 (mod 4) and by 1 when i = 1, 2 (mod 4).
/// The result is cyclic iff the input is.
Code double_rev_ref(const Code& g);

/// Cyclic Gray ordering of Z_2^n minus {0^n, 1^n} with every complementary
/// pair at separation 2^(n-1) - 1. n odd, n >= 3.
Code odd_missing_two(std::size_t n);

/// Cyclic Gray code of all of Z_2^n with complements at separation
/// 2^(n-1) +- 1. n odd, n >= 3.
Code odd_all_words(std::size_t n);

enum class MonotoneVariant {
  Plain,    // 0^n -> 1^n, n odd
  Shifted,  // 10^(n-1), 0^n, ..., 1^n, n even
};

/// Weight-monotone Gray path (weight(w_i) <= weight(w_j) + 1 whenever i < j),
/// found by constrained depth-first search. Throws SearchBudgetExceeded when
/// `node_budget` expansions do not suffice.
EndpointPath monotone_gray(std::size_t n, MonotoneVariant variant,
                           std::uint64_t node_budget = 50'000'000);

/// True iff every later word is at most one lighter than any earlier one.
bool is_weight_monotone(const Code& c);

/// The two structural facts the even-q missing-words construction relies on:
/// (a) some weight-2 word has the first position in its support, and (b)
/// strictly between the first such word and the final word every position is
/// 0 somewhere (vacuous when the first such word is the final word).
bool has_shifted_structure(const Code& c);

}  // namespace graycode::binary
