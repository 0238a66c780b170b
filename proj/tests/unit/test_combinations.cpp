#include <gtest/gtest.h>

#include "graycode/combinations.hpp"
#include "graycode/error.hpp"
#include "graycode/verify.hpp"
#include "reference.hpp"

using namespace graycode;
using Strings = std::vector<std::string>;

namespace {

std::vector<ref::Row> weight_k(std::size_t m, std::size_t k) {
  std::vector<ref::Row> out;
  for (const auto& t : ref::all_tuples(2, m)) {
    if (static_cast<std::size_t>(std::count(t.begin(), t.end(), 1)) == k) out.push_back(t);
  }
  return out;
}

ref::Row ones_then_zeros(std::size_t m, std::size_t k, bool ones_first) {
  ref::Row r(m, 0);
  for (std::size_t i = 0; i < k; ++i) r[ones_first ? i : m - 1 - i] = 1;
  return r;
}

}  // namespace

TEST(EadesMcKay, SmallCases) {
  EXPECT_EQ(ref::strings(combinations::eades_mckay(1, 3)), (Strings{"001", "010", "100"}));
  EXPECT_EQ(ref::strings(combinations::eades_mckay(0, 4)), (Strings{"0000"}));
  EXPECT_EQ(ref::strings(combinations::eades_mckay(4, 4)), (Strings{"1111"}));
  EXPECT_THROW(combinations::eades_mckay(5, 4), InvalidArgument);
}

TEST(EadesMcKay, ContractForAllSmallParameters) {
  for (std::size_t m = 1; m <= 12; ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      const auto r = ref::rows(combinations::eades_mckay(k, m));
      ASSERT_EQ(r.size(), combinations::binomial(m, k));
      EXPECT_TRUE(ref::same_set(r, weight_k(m, k))) << m << "," << k;
      EXPECT_TRUE(ref::all_steps(r, false, [](const auto& a, const auto& b) { return ref::smc_step(a, b, false); }))
          << m << "," << k;
      EXPECT_EQ(r.front(), ones_then_zeros(m, k, false));
      EXPECT_EQ(r.back(), ones_then_zeros(m, k, true));
    }
  }
}

TEST(ComplementarySubsets, GoldenTablesInBothRenderings) {
  const Code c = combinations::complementary_subsets(3);
  EXPECT_EQ(ref::strings(c), ref::read_lines(std::string(GRAYCODE_FIXTURE_DIR) + "/subsets_3of6_incidence.txt"));
  Strings sets;
  for (std::size_t i = 0; i < c.size(); ++i) sets.push_back(combinations::subset_string(c[i]));
  EXPECT_EQ(sets, ref::read_lines(std::string(GRAYCODE_FIXTURE_DIR) + "/subsets_3of6_sets.txt"));
}

TEST(ComplementarySubsets, SmallestCase) {
  EXPECT_EQ(ref::strings(combinations::complementary_subsets(1)), (Strings{"01", "10"}));
}

TEST(ComplementarySubsets, CyclicComplementaryAndCsmc) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Code c = combinations::complementary_subsets(n);
    const auto r = ref::rows(c);
    EXPECT_TRUE(c.cyclic());
    EXPECT_TRUE(ref::same_set(r, weight_k(2 * n, n))) << n;
    EXPECT_TRUE(ref::all_steps(r, true, [](const auto& a, const auto& b) { return ref::smc_step(a, b, true); }))
        << n;
    const auto h = static_cast<long long>(r.size() / 2);
    EXPECT_EQ(ref::separations(r, true, ref::complement),
              (std::map<long long, long long>{{h, static_cast<long long>(r.size())}}));
  }
}

TEST(ComplementarySubsets, SeamsUseBothInteriorKinds) {
  const auto r = ref::rows(combinations::complementary_subsets(3));
  // middle seam 111000 -> 100011 and wrap 011100 <- 000111 sit at positions 2 and 5 (1-based n and 2n)
  const ref::Row a = r[9], b = r[10];
  EXPECT_TRUE(ref::smc_step(a, b, false));
  EXPECT_FALSE(ref::smc_step(r.back(), r.front(), false));
  EXPECT_TRUE(ref::smc_step(r.back(), r.front(), true));
}

TEST(AdjacentCombinations, SmallCases) {
  EXPECT_EQ(ref::strings(combinations::adjacent_transposition_combinations(4)),
            (Strings{"0111", "1011", "1101", "1110"}));
  EXPECT_THROW(combinations::adjacent_transposition_combinations(5), InvalidArgument);
  EXPECT_THROW(combinations::adjacent_transposition_combinations(2), InvalidArgument);
}

TEST(AdjacentCombinations, ContractAndNoWrap) {
  for (std::size_t m = 4; m <= 16; m += 2) {
    const auto r = ref::rows(combinations::adjacent_transposition_combinations(m));
    EXPECT_TRUE(ref::same_set(r, weight_k(m, 3))) << m;
    EXPECT_TRUE(ref::all_steps(r, false, ref::adjacent_swap)) << m;
    EXPECT_FALSE(ref::adjacent_swap(r.back(), r.front()));
    EXPECT_EQ(r.front(), ones_then_zeros(m, 3, false));
    EXPECT_EQ(r.back(), ones_then_zeros(m, 3, true));
  }
}

TEST(SubsetRendering, RoundTrips) {
  const Word w = Word::parse("011010", 2);
  EXPECT_EQ(combinations::subset_elements(w), (std::vector<std::size_t>{2, 3, 5}));
  EXPECT_EQ(combinations::subset_string(w), "235");
  EXPECT_EQ(combinations::incidence_from_subset("235", 6), w);
  std::vector<Digit> big(11, 0);
  big[1] = big[10] = 1;
  EXPECT_EQ(combinations::subset_string(Word(2, big)), "2 11");
  EXPECT_EQ(combinations::incidence_from_subset("2 11", 11), Word(2, big));
}

TEST(Binomial, KnownValuesAndOverflowGuard) {
  EXPECT_EQ(combinations::binomial(14, 7), 3432u);
  EXPECT_EQ(combinations::binomial(6, 0), 1u);
  EXPECT_EQ(combinations::binomial(3, 5), 0u);
  EXPECT_EQ(combinations::binomial(64, 32), 1832624140942590534ULL);
}
