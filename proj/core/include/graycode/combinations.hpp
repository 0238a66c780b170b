#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graycode/code.hpp"

namespace graycode::combinations {

/// Strong minimal change order of the k-subsets of an m-set as incidence
/// vectors, from 0^(m-k)1^k to 1^k0^(m-k):
///   L(m,k) = 0 L(m-1,k), 10 reverse(L(m-2,k-1)), 11 L(m-2,k-2).
Code eades_mckay(std::size_t k, std::size_t m);

/// Cyclic complementary code of the n-subsets of a 2n-set with the
/// complementary strong minimal change property. Word i + C(2n,n)/2 is the
/// complement of word i.
Code complementary_subsets(std::size_t n);

/// Adjacent interchange order of the 3-subsets of an m-set (m even >= 4),
/// from 0^(m-3)111 to 1110^(m-3). Never cyclic.
Code adjacent_transposition_combinations(std::size_t m);

/// 1-based elements of the subset with the given incidence vector, ascending.
std::vector<std::size_t> subset_elements(WordView incidence);
/// "234" for {2,3,4} when m <= 9, "2 3 10" otherwise.
std::string subset_string(WordView incidence);
/// Inverse of subset_string for a ground set of size m.
Word incidence_from_subset(std::string_view text, std::size_t m);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace graycode::combinations
